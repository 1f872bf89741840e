#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bingham/errors.hpp"

namespace bingham {

/// Point on the unit sphere S^{q-1}. Construction normalises the input and
/// rejects directions with norm below 1e-8 as degenerate.
class UnitVector {
public:
    explicit UnitVector(std::vector<double> coords);

    std::size_t dim() const { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<double>& coords() const { return coords_; }

private:
    std::vector<double> coords_;
};

/// Dense symmetric q x q matrix; symmetrised on construction.
class SymmetricMatrix {
public:
    SymmetricMatrix(std::size_t q, std::span<const double> row_major);
    static SymmetricMatrix diagonal(std::span<const double> d);

    std::size_t dim() const { return q_; }
    double at(std::size_t i, std::size_t j) const { return entries_[i * q_ + j]; }

private:
    SymmetricMatrix() = default;

    std::size_t q_ = 0;
    std::vector<double> entries_;
};

/// Concentrations of the canonical Bingham model on S^{q-1}:
/// lambda_1 >= ... >= lambda_{q-1} >= 0, with the trailing lambda_q = 0
/// implicit and never stored.
class LambdaVector {
public:
    explicit LambdaVector(std::vector<double> lambdas);

    /// Ambient dimension q.
    std::size_t dim() const { return lambdas_.size() + 1; }
    /// Number of stored concentrations, q - 1.
    std::size_t size() const { return lambdas_.size(); }
    double operator[](std::size_t i) const { return lambdas_[i]; }
    const std::vector<double>& values() const { return lambdas_; }

private:
    std::vector<double> lambdas_;
};

/// (n, tau_1, ..., tau_{q-1}): sample size and mean squared coordinates.
/// Together these are the entire data interface of the Bingham likelihood.
struct SufficientStats {
    SufficientStats(long long n, std::vector<double> taus);

    long long n;
    std::vector<double> taus;

    std::size_t dim() const { return taus.size() + 1; }
};

/// Result of eigen_decompose: a = V diag(values) V^T with orthonormal columns
/// in V and values sorted descending.
struct EigenDecomposition {
    std::vector<double> vectors;  // row-major q x q; column j belongs to values[j]
    std::vector<double> values;
    std::size_t q = 0;

    double vector_at(std::size_t i, std::size_t j) const { return vectors[i * q + j]; }
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix (small q).
/// Throws numeric_error if the off-diagonal norm has not converged after the
/// sweep cap.
EigenDecomposition eigen_decompose(const SymmetricMatrix& a);

/// Sort eigenvalues descending and shift so the minimum is exactly zero; the
/// trailing zero is dropped. Ties keep their original order.
LambdaVector canonicalize(std::span<const double> d);

/// tau_i = mean over the sample of the squared i-th coordinate, i < q - 1.
SufficientStats sufficient_stats(const std::vector<UnitVector>& data);

/// log f*(x; lambda) = -sum_i lambda_i x_i^2 (first q - 1 coordinates).
double log_unnorm_bingham(const UnitVector& x, const LambdaVector& lam);

/// log f*(data; lambda) = -n sum_i lambda_i tau_i. Equals the sum of
/// log_unnorm_bingham over the raw sample.
double log_unnorm_lik(const SufficientStats& stats, const LambdaVector& lam);

}  // namespace bingham
