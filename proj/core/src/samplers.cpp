#include "bingham/samplers.hpp"

#include <cmath>

namespace bingham {

namespace {

constexpr std::uint64_t kMaxTrials = 10'000'000;  // per accepted draw
constexpr double kBoundSlack = 1e-12;             // log-scale slack on the envelope bound

double half_power(double t, std::size_t q) {
    switch (q) {
        case 2: return t;
        case 3: return t * std::sqrt(t);
        case 4: return t * t;
        default: return std::pow(t, 0.5 * static_cast<double>(q));
    }
}

// Rejection loop state shared by the draw-returning and stats-accumulating
// front ends. One instance per (lambda, envelope) pair.
class RejectionSampler {
public:
    RejectionSampler(const LambdaVector& lam, const EnvelopeParams& env)
        : q_(lam.dim()),
          psis_(env.psis),
          sqrt_psi_(q_),
          lam_psi_(q_, 0.0),
          z_(q_),
          mstar_(std::exp(env.log_mstar)),
          bound_(std::exp(env.log_mstar + kBoundSlack)) {
        if (env.dim() != q_)
            throw validation_error("bingham_sample: envelope dimension mismatch");
        for (std::size_t i = 0; i < q_; ++i) {
            if (!(psis_[i] > 0.0) || !(psis_[i] <= 1.0))
                throw validation_error("bingham_sample: envelope variances outside (0, 1]");
            sqrt_psi_[i] = std::sqrt(psis_[i]);
        }
        for (std::size_t i = 0; i + 1 < q_; ++i) lam_psi_[i] = lam[i] * psis_[i];
    }

    // One accepted draw. Fills x2 (size q) with the squared coordinates of the
    // accepted point; when y is non-null also its unnormalised Gaussian
    // coordinates (normalising y reproduces the point).
    std::uint64_t draw(RngState& rng, double* x2, double* y) {
        for (std::uint64_t trials = 1; trials <= kMaxTrials; ++trials) {
            double num = 0.0;  // sum z_i^2            -> x^T Psi^{-1} x numerator
            double den = 0.0;  // sum psi_i z_i^2      -> |y|^2
            double con = 0.0;  // sum lambda_i psi_i z_i^2
            for (std::size_t i = 0; i < q_; ++i) {
                const double z = rng.normal();
                z_[i] = z;
                const double z2 = z * z;
                num += z2;
                den += psis_[i] * z2;
                con += lam_psi_[i] * z2;
            }
            if (den <= 0.0) continue;  // measure-zero underflow, resample
            const double t = num / den;
            const double ratio = std::exp(-con / den) * half_power(t, q_);
            if (ratio > bound_)
                throw numeric_error("bingham_sample: envelope bound violated (f* > M* g*)");
            if (rng.uniform() * mstar_ < ratio) {
                for (std::size_t i = 0; i < q_; ++i) {
                    x2[i] = psis_[i] * z_[i] * z_[i] / den;
                    if (y != nullptr) y[i] = sqrt_psi_[i] * z_[i];
                }
                return trials;
            }
        }
        throw numeric_error("bingham_sample: trial cap reached (pathological envelope)");
    }

private:
    std::size_t q_;
    std::vector<double> psis_;
    std::vector<double> sqrt_psi_;
    std::vector<double> lam_psi_;
    std::vector<double> z_;
    double mstar_;
    double bound_;
};

}  // namespace

double acg_log_unnorm(const UnitVector& x, const EnvelopeParams& env) {
    const std::size_t q = env.dim();
    if (x.dim() != q) throw validation_error("acg_log_unnorm: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < q; ++i) s += x[i] * x[i] / env.psis[i];
    return -0.5 * static_cast<double>(q) * std::log(s);
}

UnitVector acg_sample(const EnvelopeParams& env, RngState& rng) {
    const std::size_t q = env.dim();
    std::vector<double> y(q);
    while (true) {
        double ss = 0.0;
        for (std::size_t i = 0; i < q; ++i) {
            y[i] = std::sqrt(env.psis[i]) * rng.normal();
            ss += y[i] * y[i];
        }
        if (ss >= 1e-16) break;  // |y| = 0 is a measure-zero event; resample
    }
    return UnitVector(std::move(y));
}

EnvelopeParams envelope_for(const LambdaVector& lam, double b) {
    const auto q = static_cast<double>(lam.dim());
    if (!(b > 0.0) || !(b <= q))
        throw validation_error("envelope_for: b must lie in (0, q]");
    EnvelopeParams env;
    env.b = b;
    env.psis.resize(lam.dim());
    for (std::size_t i = 0; i < lam.size(); ++i) env.psis[i] = 1.0 / (1.0 + 2.0 * lam[i] / b);
    env.psis.back() = 1.0;
    // sup over t >= 0 of h(t) = exp(-t) (1 + 2t/b)^{q/2}, attained at (q - b)/2.
    env.log_mstar = -0.5 * (q - b) + 0.5 * q * std::log(q / b);
    return env;
}

double tuning_objective(const LambdaVector& lam, double b) {
    const EnvelopeParams env = envelope_for(lam, b);
    double s = env.log_mstar;
    for (double psi : env.psis) s += 0.5 * std::log(psi);
    return s;
}

double tune_b(const LambdaVector& lam) {
    const auto q = static_cast<double>(lam.dim());
    const int grid = 512;

    // Bracket the minimum on a uniform grid over (0, q], then refine.
    int best = 1;
    double best_val = tuning_objective(lam, q / grid);
    for (int k = 2; k <= grid; ++k) {
        const double val = tuning_objective(lam, q * k / grid);
        if (val < best_val) {
            best_val = val;
            best = k;
        }
    }
    double lo = (best > 1) ? q * (best - 1) / grid : q * 0.5 / grid;
    double hi = (best < grid) ? q * (best + 1) / grid : q;

    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = tuning_objective(lam, x1);
    double f2 = tuning_objective(lam, x2);
    while (hi - lo > 1e-6) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = tuning_objective(lam, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = tuning_objective(lam, x2);
        }
    }
    return 0.5 * (lo + hi);
}

BinghamDraw bingham_sample(const LambdaVector& lam, const EnvelopeParams& env, RngState& rng) {
    RejectionSampler sampler(lam, env);
    const std::size_t q = lam.dim();
    std::vector<double> x2(q);
    std::vector<double> y(q);
    const std::uint64_t trials = sampler.draw(rng, x2.data(), y.data());
    return BinghamDraw{UnitVector(std::move(y)), trials};
}

std::vector<UnitVector> bingham_sample_n(const LambdaVector& lam, long long n, double b,
                                         RngState& rng) {
    if (n < 1) throw validation_error("bingham_sample_n: n must be >= 1");
    const EnvelopeParams env = envelope_for(lam, b);
    RejectionSampler sampler(lam, env);
    const std::size_t q = lam.dim();
    std::vector<double> x2(q);
    std::vector<double> y(q);
    std::vector<UnitVector> out;
    out.reserve(static_cast<std::size_t>(n));
    for (long long k = 0; k < n; ++k) {
        sampler.draw(rng, x2.data(), y.data());
        out.emplace_back(std::vector<double>(y.begin(), y.end()));
    }
    return out;
}

SufficientStats bingham_sample_stats(const LambdaVector& lam, long long n,
                                     const EnvelopeParams& env, RngState& rng,
                                     std::uint64_t* total_trials) {
    if (n < 1) throw validation_error("bingham_sample_stats: n must be >= 1");
    RejectionSampler sampler(lam, env);
    const std::size_t q = lam.dim();
    std::vector<double> x2(q);
    std::vector<double> sums(q - 1, 0.0);
    std::uint64_t trials = 0;
    for (long long k = 0; k < n; ++k) {
        trials += sampler.draw(rng, x2.data(), nullptr);
        for (std::size_t i = 0; i + 1 < q; ++i) sums[i] += x2[i];
    }
    if (total_trials != nullptr) *total_trials = trials;
    for (double& s : sums) s /= static_cast<double>(n);
    return SufficientStats(n, std::move(sums));
}

}  // namespace bingham
