#pragma once

#include "bingham/inference.hpp"

namespace bingham {

/// Resolutions for the brute-force quadratures (q = 2 and q = 3 only).
/// Counts must be even and at least 64.
struct QuadratureGrid {
    int n_theta = 512;   // colatitude intervals on [0, pi], q = 3
    int n_phi = 1024;    // longitude intervals on [0, 2 pi], q = 3
    int n_angle = 8192;  // circle intervals, q = 2
};

/// Normalising constant c(Lambda) = integral of exp(-sum lambda_i x_i^2) over
/// the sphere: tensor-product composite Simpson in spherical coordinates with
/// the sin(theta) Jacobian (q = 3), periodic trapezoid on the circle (q = 2).
/// Compensated summation keeps the result independent of evaluation order.
double constant_quadrature(const LambdaVector& lam, const QuadratureGrid& grid = {});

/// E[x_i^2] under Bingham(lambda) by the same quadrature, i in [0, q).
double moment_quadrature(const LambdaVector& lam, std::size_t i, const QuadratureGrid& grid = {});

/// Random-walk Metropolis-Hastings with the normalising constant evaluated by
/// quadrature in every acceptance ratio (q = 3 only). Slow by construction;
/// exists to validate the exchange sampler against an explicit-constant route.
/// With prior_only the likelihood is dropped and the chain targets the ordered
/// exponential prior.
Chain reference_mh_chain(const SufficientStats& stats, const PriorSpec& prior,
                         const ChainConfig& cfg, const QuadratureGrid& grid = {},
                         bool prior_only = false);

}  // namespace bingham
