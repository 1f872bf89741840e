#include "bingham/diagnostics.hpp"

#include <algorithm>
#include <cmath>

namespace bingham {

namespace {

// Type-7 quantile: linear interpolation between order statistics.
double quantile_sorted(const std::vector<double>& sorted, double p) {
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    const double h = p * static_cast<double>(n - 1);
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= n) return sorted[n - 1];
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

std::vector<double> acf(std::span<const double> series, std::size_t max_lag) {
    const std::size_t n = series.size();
    if (n <= max_lag)
        throw validation_error("acf: series length must exceed max_lag");
    double mean = 0.0;
    for (double x : series) mean += x;
    mean /= static_cast<double>(n);
    double denom = 0.0;
    for (double x : series) denom += (x - mean) * (x - mean);
    if (denom == 0.0) throw validation_error("acf: constant series has no autocorrelation");
    std::vector<double> r(max_lag + 1);
    for (std::size_t k = 0; k <= max_lag; ++k) {
        double s = 0.0;
        for (std::size_t t = 0; t + k < n; ++t)
            s += (series[t] - mean) * (series[t + k] - mean);
        r[k] = s / denom;
    }
    return r;
}

double effective_sample_size(std::span<const double> series) {
    const std::size_t n = series.size();
    if (n < 4) return static_cast<double>(n);
    const std::size_t max_lag = std::min<std::size_t>(n - 1, 2000);
    std::vector<double> r;
    try {
        r = acf(series, max_lag);
    } catch (const validation_error&) {
        return static_cast<double>(n);  // constant series: every draw identical
    }
    // Geyer initial positive sequence: sum pair sums while they stay positive.
    double tau = -1.0;
    for (std::size_t m = 0; 2 * m + 1 <= max_lag; ++m) {
        const double pair = r[2 * m] + r[2 * m + 1];
        if (pair <= 0.0) break;
        tau += 2.0 * pair;
    }
    tau = std::max(tau, 1.0);
    return std::min(static_cast<double>(n), static_cast<double>(n) / tau);
}

SummaryReport summarize(const Chain& chain, double level) {
    if (chain.rows() == 0) throw validation_error("summarize: empty chain");
    if (!(level > 0.0) || !(level < 1.0))
        throw validation_error("summarize: level must lie in (0, 1)");

    SummaryReport rep;
    rep.level = level;
    rep.accept_rate = chain.accept_rate();
    rep.draw_count = chain.rows();
    const std::size_t n = chain.rows();
    const double p_lo = 0.5 * (1.0 - level);
    const double p_hi = 1.0 - p_lo;
    for (std::size_t c = 0; c < chain.n_params; ++c) {
        std::vector<double> col = chain.column(c);
        double mean = 0.0;
        for (double x : col) mean += x;
        mean /= static_cast<double>(n);
        double ss = 0.0;
        for (double x : col) ss += (x - mean) * (x - mean);
        const double sd = (n > 1) ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
        rep.mean.push_back(mean);
        rep.sd.push_back(sd);
        rep.ess.push_back(effective_sample_size(col));
        std::sort(col.begin(), col.end());
        rep.ci_lo.push_back(quantile_sorted(col, p_lo));
        rep.ci_hi.push_back(quantile_sorted(col, p_hi));
    }
    return rep;
}

double chi_square_quantile_2df(double level) {
    if (!(level > 0.0) || !(level < 1.0))
        throw validation_error("chi_square_quantile_2df: level must lie in (0, 1)");
    return -2.0 * std::log(1.0 - level);
}

RegionTestResult difference_region_test(const Chain& chain_a, const Chain& chain_b,
                                        double level) {
    if (chain_a.n_params != 2 || chain_b.n_params != 2)
        throw validation_error("difference_region_test: chains must have two parameters");
    const std::size_t n = std::min(chain_a.rows(), chain_b.rows());
    if (n < 2) throw validation_error("difference_region_test: need at least two paired draws");

    double m0 = 0.0, m1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        m0 += chain_a.at(i, 0) - chain_b.at(i, 0);
        m1 += chain_a.at(i, 1) - chain_b.at(i, 1);
    }
    m0 /= static_cast<double>(n);
    m1 /= static_cast<double>(n);

    double c00 = 0.0, c01 = 0.0, c11 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d0 = chain_a.at(i, 0) - chain_b.at(i, 0) - m0;
        const double d1 = chain_a.at(i, 1) - chain_b.at(i, 1) - m1;
        c00 += d0 * d0;
        c01 += d0 * d1;
        c11 += d1 * d1;
    }
    c00 /= static_cast<double>(n - 1);
    c01 /= static_cast<double>(n - 1);
    c11 /= static_cast<double>(n - 1);

    const double det = c00 * c11 - c01 * c01;
    if (!(c00 > 0.0) || !(det > 0.0))
        throw numeric_error("difference_region_test: singular covariance of the differences");

    RegionTestResult res;
    res.mean_diff = {m0, m1};
    res.cov_diff = {c00, c01, c01, c11};
    res.mahalanobis_sq_origin = (m0 * m0 * c11 - 2.0 * m0 * m1 * c01 + m1 * m1 * c00) / det;
    res.threshold = chi_square_quantile_2df(level);
    res.origin_inside = res.mahalanobis_sq_origin <= res.threshold;
    return res;
}

}  // namespace bingham
