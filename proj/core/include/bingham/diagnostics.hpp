#pragma once

#include <array>

#include "bingham/inference.hpp"

namespace bingham {

/// Per-parameter posterior summaries at a given credible level.
struct SummaryReport {
    double level = 0.95;
    std::vector<double> mean;
    std::vector<double> sd;
    std::vector<double> ci_lo;
    std::vector<double> ci_hi;
    std::vector<double> ess;  // effective draw count per parameter
    double accept_rate = 0.0;
    std::size_t draw_count = 0;
};

/// Bivariate-normal probability-region test on paired chain differences.
struct RegionTestResult {
    std::array<double, 2> mean_diff{};
    std::array<double, 4> cov_diff{};  // row-major 2 x 2
    double mahalanobis_sq_origin = 0.0;
    double threshold = 0.0;
    bool origin_inside = false;
};

/// Sample autocorrelation r_0..r_max_lag with r_0 = 1. Requires
/// series.size() > max_lag and a non-constant series.
std::vector<double> acf(std::span<const double> series, std::size_t max_lag);

/// Effective sample size by Geyer's initial positive sequence on the ACF.
double effective_sample_size(std::span<const double> series);

/// Mean, sd, equal-tail interval (linear-interpolation quantiles), acceptance
/// rate and effective draw counts for a chain.
SummaryReport summarize(const Chain& chain, double level);

/// chi-square quantile with 2 degrees of freedom: -2 log(1 - level).
double chi_square_quantile_2df(double level);

/// Pair the two chains' draws by index (truncating to the shorter one), fit a
/// bivariate normal to the differences and test whether the origin lies inside
/// the `level` probability region. Both chains must have two parameters.
RegionTestResult difference_region_test(const Chain& chain_a, const Chain& chain_b, double level);

}  // namespace bingham
