#pragma once

#include <cstdint>

#include "bingham/model.hpp"
#include "bingham/rng.hpp"

namespace bingham {

/// Angular central Gaussian envelope for rejection sampling from
/// Bingham(lambda). psis are the diagonal Gaussian variances
/// 1 / (1 + 2 lambda_i / b) (the last entry is 1); log_mstar is the log of the
/// bound M* with M* g*(x) >= f*(x) on the whole sphere.
struct EnvelopeParams {
    double b = 1.0;
    std::vector<double> psis;
    double log_mstar = 0.0;

    std::size_t dim() const { return psis.size(); }
};

/// log g*(x) = -(q/2) log(x^T Psi^{-1} x) with Psi^{-1} = diag(1 / psis).
double acg_log_unnorm(const UnitVector& x, const EnvelopeParams& env);

/// Draw y_i ~ Normal(0, psi_i) independently and return y / |y|.
UnitVector acg_sample(const EnvelopeParams& env, RngState& rng);

/// Build the envelope for a given tuning constant b in (0, q].
///
/// The density ratio f*/g* equals h(t) = exp(-t) (1 + 2t/b)^{q/2} with
/// t = x^T Lambda x >= 0, maximised at t = (q - b)/2, so
/// M* = exp(-(q - b)/2) (q/b)^{q/2} (and M* = 1 at b = q).
EnvelopeParams envelope_for(const LambdaVector& lam, double b);

/// log of the quantity minimised by tune_b: log M*(b) + (1/2) sum_i log psi_i(b).
/// Proportional to the mean trial count M on the log scale.
double tuning_objective(const LambdaVector& lam, double b);

/// Minimise tuning_objective over b in (0, q] (coarse bracket plus
/// golden-section refinement to 1e-6 in b).
double tune_b(const LambdaVector& lam);

struct BinghamDraw {
    UnitVector x;
    std::uint64_t trials;  // candidates consumed, including the accepted one
};

/// One exact Bingham(lambda) draw by rejection from the ACG envelope.
/// Throws numeric_error on an envelope bound violation or after 1e7 rejected
/// candidates.
BinghamDraw bingham_sample(const LambdaVector& lam, const EnvelopeParams& env, RngState& rng);

/// n independent exact Bingham draws with the envelope built once from b.
std::vector<UnitVector> bingham_sample_n(const LambdaVector& lam, long long n, double b,
                                         RngState& rng);

/// Sufficient statistics of n fresh Bingham draws, accumulated without
/// materialising the vectors. Draw-for-draw equivalent to running
/// bingham_sample n times on the same stream.
SufficientStats bingham_sample_stats(const LambdaVector& lam, long long n,
                                     const EnvelopeParams& env, RngState& rng,
                                     std::uint64_t* total_trials = nullptr);

}  // namespace bingham
