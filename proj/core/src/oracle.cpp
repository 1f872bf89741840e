#include "bingham/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace bingham {

namespace {

// Compensated (Kahan) accumulator; keeps quadrature sums deterministic and
// accurate regardless of grid size.
struct Kahan {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

void check_grid(const QuadratureGrid& g) {
    const auto bad = [](int n) { return n < 64 || n % 2 != 0; };
    if (bad(g.n_theta) || bad(g.n_phi) || bad(g.n_angle))
        throw validation_error("QuadratureGrid: resolutions must be even and >= 64");
}

double simpson_coeff(int i, int n) {
    if (i == 0 || i == n) return 1.0;
    return (i % 2 == 1) ? 4.0 : 2.0;
}

// Nodes and weights of the tensor-product Simpson rule on S^2 in spherical
// coordinates. Independent of lambda, so reusable across evaluations.
struct SphereTable {
    std::vector<double> sin2_theta, cos2_theta, w_theta;  // weight includes sin(theta)
    std::vector<double> cos2_phi, sin2_phi, w_phi;
    double scale;

    explicit SphereTable(const QuadratureGrid& g) {
        check_grid(g);
        const double pi = std::numbers::pi;
        const double h_theta = pi / g.n_theta;
        const double h_phi = 2.0 * pi / g.n_phi;
        sin2_theta.resize(g.n_theta + 1);
        cos2_theta.resize(g.n_theta + 1);
        w_theta.resize(g.n_theta + 1);
        for (int i = 0; i <= g.n_theta; ++i) {
            const double theta = i * h_theta;
            const double st = std::sin(theta);
            const double ct = std::cos(theta);
            sin2_theta[i] = st * st;
            cos2_theta[i] = ct * ct;
            w_theta[i] = simpson_coeff(i, g.n_theta) * st;
        }
        cos2_phi.resize(g.n_phi + 1);
        sin2_phi.resize(g.n_phi + 1);
        w_phi.resize(g.n_phi + 1);
        for (int j = 0; j <= g.n_phi; ++j) {
            const double phi = j * h_phi;
            const double cp = std::cos(phi);
            const double sp = std::sin(phi);
            cos2_phi[j] = cp * cp;
            sin2_phi[j] = sp * sp;
            w_phi[j] = simpson_coeff(j, g.n_phi);
        }
        scale = (h_theta / 3.0) * (h_phi / 3.0);
    }

    // integral over S^2 of exp(-l1 x1^2 - l2 x2^2), optionally weighted by
    // x_m^2 (moment = 0, 1, 2; moment = -1 for the plain constant).
    double integrate(double l1, double l2, int moment) const {
        Kahan total;
        for (std::size_t i = 0; i < w_theta.size(); ++i) {
            if (w_theta[i] == 0.0) continue;
            const double u = sin2_theta[i];
            Kahan inner;
            for (std::size_t j = 0; j < w_phi.size(); ++j) {
                double f = std::exp(-u * (l1 * cos2_phi[j] + l2 * sin2_phi[j]));
                if (moment == 0) f *= u * cos2_phi[j];
                else if (moment == 1) f *= u * sin2_phi[j];
                else if (moment == 2) f *= cos2_theta[i];
                inner.add(w_phi[j] * f);
            }
            total.add(w_theta[i] * inner.sum);
        }
        return total.sum * scale;
    }
};

// Periodic trapezoid on the circle for q = 2.
double circle_integral(double lambda, int moment, int n_angle) {
    const double h = 2.0 * std::numbers::pi / n_angle;
    Kahan total;
    for (int k = 0; k < n_angle; ++k) {
        const double c = std::cos(k * h);
        const double c2 = c * c;
        double f = std::exp(-lambda * c2);
        if (moment == 0) f *= c2;
        else if (moment == 1) f *= 1.0 - c2;
        total.add(f);
    }
    return total.sum * h;
}

}  // namespace

double constant_quadrature(const LambdaVector& lam, const QuadratureGrid& grid) {
    check_grid(grid);
    if (lam.dim() == 2) return circle_integral(lam[0], -1, grid.n_angle);
    if (lam.dim() == 3) return SphereTable(grid).integrate(lam[0], lam[1], -1);
    throw validation_error("constant_quadrature: only q = 2 and q = 3 are supported");
}

double moment_quadrature(const LambdaVector& lam, std::size_t i, const QuadratureGrid& grid) {
    check_grid(grid);
    if (i >= lam.dim()) throw validation_error("moment_quadrature: coordinate index out of range");
    if (lam.dim() == 2) {
        return circle_integral(lam[0], static_cast<int>(i), grid.n_angle) /
               circle_integral(lam[0], -1, grid.n_angle);
    }
    if (lam.dim() == 3) {
        const SphereTable table(grid);
        return table.integrate(lam[0], lam[1], static_cast<int>(i)) /
               table.integrate(lam[0], lam[1], -1);
    }
    throw validation_error("moment_quadrature: only q = 2 and q = 3 are supported");
}

Chain reference_mh_chain(const SufficientStats& stats, const PriorSpec& prior,
                         const ChainConfig& cfg, const QuadratureGrid& grid, bool prior_only) {
    if (stats.dim() != 3)
        throw validation_error("reference_mh_chain: only q = 3 is supported");
    if (prior.rates.size() != stats.taus.size())
        throw validation_error("reference_mh_chain: prior and statistics dimensions differ");
    if (cfg.iterations == 0 || cfg.iterations <= cfg.burn_in)
        throw validation_error("ChainConfig: iterations must exceed burn_in");
    if (cfg.thin < 1) throw validation_error("ChainConfig: thin must be >= 1");
    if (!(cfg.proposal_sigma > 0.0))
        throw validation_error("ChainConfig: proposal_sigma must be positive");

    const SphereTable table(grid);
    const double n = static_cast<double>(stats.n);
    const auto log_post = [&](const LambdaVector& lam) {
        double lp = log_prior(lam.values(), prior);
        if (prior_only) return lp;
        lp += log_unnorm_lik(stats, lam);
        lp -= n * std::log(table.integrate(lam[0], lam[1], -1));
        return lp;
    };

    RngState rng(cfg.seed, cfg.stream);
    LambdaVector current(std::vector<double>(2, 0.0));
    double current_log_post = log_post(current);

    Chain chain;
    chain.n_params = 2;
    chain.config = cfg;
    chain.stats = stats;
    chain.draws.reserve(((cfg.iterations - cfg.burn_in) / cfg.thin) * 2);

    for (std::uint64_t iter = 1; iter <= cfg.iterations; ++iter) {
        const std::vector<double> cand = propose(current, cfg.proposal_sigma, rng);
        ++chain.proposed_count;
        if (log_prior(cand, prior) > -std::numeric_limits<double>::infinity()) {
            LambdaVector lam_can(cand);
            const double cand_log_post = log_post(lam_can);
            const double log_ratio = cand_log_post - current_log_post;
            if (log_ratio >= 0.0 || rng.uniform() < std::exp(log_ratio)) {
                current = std::move(lam_can);
                current_log_post = cand_log_post;
                ++chain.accept_count;
            }
        }
        if (iter > cfg.burn_in && (iter - cfg.burn_in) % cfg.thin == 0) {
            chain.draws.insert(chain.draws.end(), current.values().begin(),
                               current.values().end());
        }
    }
    return chain;
}

}  // namespace bingham
