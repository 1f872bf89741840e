#include "bingham/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bingham {

namespace {
constexpr double kMinNorm = 1e-8;
constexpr double kStatsSlack = 1e-9;
}  // namespace

UnitVector::UnitVector(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) throw validation_error("UnitVector: dimension must be >= 2");
    double ss = 0.0;
    for (double c : coords_) ss += c * c;
    const double norm = std::sqrt(ss);
    if (!std::isfinite(norm) || norm < kMinNorm)
        throw validation_error("UnitVector: degenerate input (norm below 1e-8 or non-finite)");
    for (double& c : coords_) c /= norm;
}

SymmetricMatrix::SymmetricMatrix(std::size_t q, std::span<const double> row_major)
    : q_(q), entries_(q * q) {
    if (q < 2) throw validation_error("SymmetricMatrix: dimension must be >= 2");
    if (row_major.size() != q * q)
        throw validation_error("SymmetricMatrix: need q*q row-major entries");
    for (std::size_t i = 0; i < q; ++i) {
        entries_[i * q + i] = row_major[i * q + i];
        for (std::size_t j = i + 1; j < q; ++j) {
            const double v = 0.5 * (row_major[i * q + j] + row_major[j * q + i]);
            entries_[i * q + j] = v;
            entries_[j * q + i] = v;
        }
    }
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> d) {
    SymmetricMatrix m;
    m.q_ = d.size();
    if (m.q_ < 2) throw validation_error("SymmetricMatrix: dimension must be >= 2");
    m.entries_.assign(m.q_ * m.q_, 0.0);
    for (std::size_t i = 0; i < m.q_; ++i) m.entries_[i * m.q_ + i] = d[i];
    return m;
}

LambdaVector::LambdaVector(std::vector<double> lambdas) : lambdas_(std::move(lambdas)) {
    if (lambdas_.empty())
        throw validation_error("LambdaVector: needs at least one concentration (q >= 2)");
    for (std::size_t i = 0; i + 1 < lambdas_.size(); ++i)
        if (!(lambdas_[i] >= lambdas_[i + 1]))
            throw validation_error("LambdaVector: concentrations must be non-increasing");
    if (!(lambdas_.back() >= 0.0))
        throw validation_error("LambdaVector: concentrations must be non-negative");
}

SufficientStats::SufficientStats(long long n_, std::vector<double> taus_)
    : n(n_), taus(std::move(taus_)) {
    if (n < 1) throw validation_error("SufficientStats: n must be >= 1");
    if (taus.empty()) throw validation_error("SufficientStats: needs q - 1 >= 1 entries");
    double sum = 0.0;
    for (double t : taus) {
        if (!(t >= -kStatsSlack) || !(t <= 1.0 + kStatsSlack))
            throw validation_error("SufficientStats: tau outside [0, 1]");
        sum += t;
    }
    if (!(sum <= 1.0 + kStatsSlack))
        throw validation_error("SufficientStats: sum of taus exceeds 1");
    for (double& t : taus) t = std::clamp(t, 0.0, 1.0);
}

EigenDecomposition eigen_decompose(const SymmetricMatrix& a) {
    const std::size_t q = a.dim();
    std::vector<double> m(q * q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) m[i * q + j] = a.at(i, j);
    std::vector<double> v(q * q, 0.0);
    for (std::size_t i = 0; i < q; ++i) v[i * q + i] = 1.0;

    constexpr int kMaxSweeps = 100;
    constexpr double kOffTol = 1e-12;

    const auto off_frobenius = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = i + 1; j < q; ++j) s += 2.0 * m[i * q + j] * m[i * q + j];
        return std::sqrt(s);
    };

    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_frobenius() <= kOffTol) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < q; ++p) {
            for (std::size_t r = p + 1; r < q; ++r) {
                const double apr = m[p * q + r];
                if (apr == 0.0) continue;
                const double app = m[p * q + p];
                const double arr = m[r * q + r];
                const double tau = (arr - app) / (2.0 * apr);
                double t;
                if (std::abs(tau) > 1e154) {
                    t = 1.0 / (2.0 * tau);
                } else {
                    t = ((tau >= 0.0) ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < q; ++k) {
                    if (k == p || k == r) continue;
                    const double akp = m[k * q + p];
                    const double akr = m[k * q + r];
                    m[k * q + p] = m[p * q + k] = c * akp - s * akr;
                    m[k * q + r] = m[r * q + k] = s * akp + c * akr;
                }
                m[p * q + p] = app - t * apr;
                m[r * q + r] = arr + t * apr;
                m[p * q + r] = m[r * q + p] = 0.0;
                for (std::size_t k = 0; k < q; ++k) {
                    const double vkp = v[k * q + p];
                    const double vkr = v[k * q + r];
                    v[k * q + p] = c * vkp - s * vkr;
                    v[k * q + r] = s * vkp + c * vkr;
                }
            }
        }
    }
    if (!converged && off_frobenius() > kOffTol)
        throw numeric_error("eigen_decompose: Jacobi sweeps did not converge");

    std::vector<std::size_t> order(q);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return m[i * q + i] > m[j * q + j]; });

    EigenDecomposition out;
    out.q = q;
    out.values.resize(q);
    out.vectors.resize(q * q);
    for (std::size_t j = 0; j < q; ++j) {
        out.values[j] = m[order[j] * q + order[j]];
        for (std::size_t i = 0; i < q; ++i) out.vectors[i * q + j] = v[i * q + order[j]];
    }
    return out;
}

LambdaVector canonicalize(std::span<const double> d) {
    if (d.size() < 2) throw validation_error("canonicalize: need at least two eigenvalues");
    std::vector<double> sorted(d.begin(), d.end());
    std::stable_sort(sorted.begin(), sorted.end(), std::greater<double>());
    const double shift = sorted.back();
    std::vector<double> lambdas(sorted.size() - 1);
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) lambdas[i] = sorted[i] - shift;
    return LambdaVector(std::move(lambdas));
}

SufficientStats sufficient_stats(const std::vector<UnitVector>& data) {
    if (data.empty()) throw validation_error("sufficient_stats: empty sample");
    const std::size_t q = data[0].dim();
    std::vector<double> sums(q - 1, 0.0);
    for (const auto& x : data) {
        if (x.dim() != q) throw validation_error("sufficient_stats: mixed dimensions in sample");
        for (std::size_t i = 0; i + 1 < q; ++i) sums[i] += x[i] * x[i];
    }
    const auto n = static_cast<long long>(data.size());
    for (double& s : sums) s /= static_cast<double>(n);
    return SufficientStats(n, std::move(sums));
}

double log_unnorm_bingham(const UnitVector& x, const LambdaVector& lam) {
    if (x.dim() != lam.dim())
        throw validation_error("log_unnorm_bingham: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < lam.size(); ++i) s += lam[i] * x[i] * x[i];
    return -s;
}

double log_unnorm_lik(const SufficientStats& stats, const LambdaVector& lam) {
    if (stats.dim() != lam.dim())
        throw validation_error("log_unnorm_lik: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < lam.size(); ++i) s += lam[i] * stats.taus[i];
    return -static_cast<double>(stats.n) * s;
}

}  // namespace bingham
