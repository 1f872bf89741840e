#pragma once

#include <cstdint>
#include <optional>

#include "bingham/model.hpp"
#include "bingham/samplers.hpp"

namespace bingham {

/// Independent Exponential(rate_i) priors on the concentrations, restricted to
/// the ordered cone lambda_1 >= ... >= lambda_{q-1} >= 0.
struct PriorSpec {
    explicit PriorSpec(std::vector<double> rates);

    std::vector<double> rates;
};

struct ChainConfig {
    std::uint64_t iterations = 1'000'000;
    std::uint64_t burn_in = 100'000;
    std::uint64_t thin = 10;
    double proposal_sigma = 1.0;  // proposal covariance sigma * I (sigma is a variance)
    double b = 1.0;
    bool tune_b = false;  // retune the envelope constant for every proposal
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

/// Posterior draws (post burn-in, thinned) plus acceptance bookkeeping.
/// Draws are stored row-major with n_params columns; every stored row
/// satisfies the ordering constraint.
struct Chain {
    std::vector<double> draws;
    std::size_t n_params = 0;
    std::uint64_t accept_count = 0;
    std::uint64_t proposed_count = 0;
    ChainConfig config;
    std::optional<SufficientStats> stats;

    std::size_t rows() const { return n_params == 0 ? 0 : draws.size() / n_params; }
    double at(std::size_t row, std::size_t col) const { return draws[row * n_params + col]; }
    std::vector<double> column(std::size_t col) const;
    double accept_rate() const;
};

/// log prior density up to an additive constant: -sum_i rate_i lambda_i on the
/// ordered cone, -infinity outside. Accepts unconstrained proposal vectors.
double log_prior(std::span<const double> lam, const PriorSpec& prior);

/// Symmetric random-walk proposal: lam_i + Normal(0, sigma) per coordinate
/// (sigma is the variance).
std::vector<double> propose(const LambdaVector& lam, double sigma, RngState& rng);

/// Log acceptance ratio of the exchange move from `lam` to `lam_can` given the
/// observed statistics and the statistics of auxiliary data simulated under
/// lam_can:
///
///   [log f*(x | lam_can) + log f*(y | lam) + log pi(lam_can)]
/// - [log f*(x | lam)     + log f*(y | lam_can) + log pi(lam)]
///
/// Proposal terms are omitted (symmetric random walk) and no normalising
/// constant appears anywhere. Requires stats_aux.n == stats_obs.n.
double exchange_log_ratio(const SufficientStats& stats_obs, const SufficientStats& stats_aux,
                          const LambdaVector& lam, const LambdaVector& lam_can,
                          const PriorSpec& prior);

/// Run the exchange-algorithm chain targeting the posterior of lambda.
/// Proposals outside the prior support are rejected before any auxiliary
/// simulation; otherwise auxiliary data of size stats.n are drawn under the
/// candidate and the exchange ratio decides. Acceptance counts cover all
/// proposals including constraint rejections.
Chain run_exchange(const SufficientStats& stats, const PriorSpec& prior, const ChainConfig& cfg);

}  // namespace bingham
