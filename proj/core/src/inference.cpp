#include "bingham/inference.hpp"

#include <cmath>
#include <limits>

namespace bingham {

namespace {

void validate_config(const ChainConfig& cfg, std::size_t q) {
    if (cfg.iterations == 0 || cfg.iterations <= cfg.burn_in)
        throw validation_error("ChainConfig: iterations must exceed burn_in");
    if (cfg.thin < 1) throw validation_error("ChainConfig: thin must be >= 1");
    if (!(cfg.proposal_sigma > 0.0))
        throw validation_error("ChainConfig: proposal_sigma must be positive");
    if (!cfg.tune_b && (!(cfg.b > 0.0) || !(cfg.b <= static_cast<double>(q))))
        throw validation_error("ChainConfig: b must lie in (0, q]");
}

bool ordered_nonnegative(std::span<const double> lam) {
    for (std::size_t i = 0; i + 1 < lam.size(); ++i)
        if (!(lam[i] >= lam[i + 1])) return false;
    return lam.empty() ? false : lam.back() >= 0.0;
}

}  // namespace

PriorSpec::PriorSpec(std::vector<double> rates_) : rates(std::move(rates_)) {
    if (rates.empty()) throw validation_error("PriorSpec: needs at least one rate");
    for (double r : rates)
        if (!(r > 0.0)) throw validation_error("PriorSpec: rates must be strictly positive");
}

std::vector<double> Chain::column(std::size_t col) const {
    std::vector<double> out(rows());
    for (std::size_t r = 0; r < out.size(); ++r) out[r] = at(r, col);
    return out;
}

double Chain::accept_rate() const {
    if (proposed_count == 0) return std::numeric_limits<double>::quiet_NaN();
    return static_cast<double>(accept_count) / static_cast<double>(proposed_count);
}

double log_prior(std::span<const double> lam, const PriorSpec& prior) {
    if (lam.size() != prior.rates.size())
        throw validation_error("log_prior: dimension mismatch");
    if (!ordered_nonnegative(lam)) return -std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (std::size_t i = 0; i < lam.size(); ++i) s += prior.rates[i] * lam[i];
    return -s;
}

std::vector<double> propose(const LambdaVector& lam, double sigma, RngState& rng) {
    if (!(sigma > 0.0)) throw validation_error("propose: sigma must be positive");
    const double sd = std::sqrt(sigma);
    std::vector<double> out(lam.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = lam[i] + sd * rng.normal();
    return out;
}

double exchange_log_ratio(const SufficientStats& stats_obs, const SufficientStats& stats_aux,
                          const LambdaVector& lam, const LambdaVector& lam_can,
                          const PriorSpec& prior) {
    if (stats_aux.n != stats_obs.n)
        throw validation_error("exchange_log_ratio: auxiliary sample size differs from data");
    if (stats_obs.dim() != lam.dim() || lam_can.dim() != lam.dim() ||
        prior.rates.size() != lam.size())
        throw validation_error("exchange_log_ratio: dimension mismatch");
    const double top = log_unnorm_lik(stats_obs, lam_can) + log_unnorm_lik(stats_aux, lam) +
                       log_prior(lam_can.values(), prior);
    const double bot = log_unnorm_lik(stats_obs, lam) + log_unnorm_lik(stats_aux, lam_can) +
                       log_prior(lam.values(), prior);
    return top - bot;
}

Chain run_exchange(const SufficientStats& stats, const PriorSpec& prior, const ChainConfig& cfg) {
    const std::size_t q = stats.dim();
    if (prior.rates.size() != stats.taus.size())
        throw validation_error("run_exchange: prior and statistics dimensions differ");
    validate_config(cfg, q);

    RngState rng(cfg.seed, cfg.stream);
    LambdaVector current(std::vector<double>(q - 1, 0.0));

    Chain chain;
    chain.n_params = q - 1;
    chain.config = cfg;
    chain.stats = stats;
    chain.draws.reserve(((cfg.iterations - cfg.burn_in) / cfg.thin) * (q - 1));

    for (std::uint64_t iter = 1; iter <= cfg.iterations; ++iter) {
        const std::vector<double> cand = propose(current, cfg.proposal_sigma, rng);
        ++chain.proposed_count;
        if (log_prior(cand, prior) > -std::numeric_limits<double>::infinity()) {
            LambdaVector lam_can(cand);
            const double b = cfg.tune_b ? tune_b(lam_can) : cfg.b;
            const EnvelopeParams env = envelope_for(lam_can, b);
            const SufficientStats stats_aux = bingham_sample_stats(lam_can, stats.n, env, rng);
            const double log_ratio = exchange_log_ratio(stats, stats_aux, current, lam_can, prior);
            if (log_ratio >= 0.0 || rng.uniform() < std::exp(log_ratio)) {
                current = std::move(lam_can);
                ++chain.accept_count;
            }
        }
        if (iter > cfg.burn_in && (iter - cfg.burn_in) % cfg.thin == 0) {
            if (!ordered_nonnegative(current.values()))
                throw numeric_error("run_exchange: stored draw violates the ordering constraint");
            chain.draws.insert(chain.draws.end(), current.values().begin(),
                               current.values().end());
        }
    }
    return chain;
}

}  // namespace bingham
