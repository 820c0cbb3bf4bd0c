//
// Project     : speclim
// File        : contraction.hpp
// Description : Chart between the reduced group and the sphere, the
//               concentration rescaling, and limit-verification harnesses
//
// SPDX-License-Identifier: BSD-3-Clause
//

#pragma once

#include <speclim/errors.hpp>
#include <speclim/heis.hpp>
#include <speclim/sphere.hpp>

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace speclim::contraction {

/// A point of the group chart: z = rho * eta(theta, phi) in C^n together
/// with the central coordinate t.  eta is the unit vector whose j-th entry
/// carries the phase e^{i phi_j} and a product of sines/cosines of the
/// polar angles theta_1..theta_{n-1}.
struct ChartPoint {
    double              rho = 0.0;  ///< radial coordinate, >= 0
    std::vector<double> theta;      ///< n-1 polar angles in [0, pi/2]
    std::vector<double> phi;        ///< n phases in [0, 2 pi]
    double              t = 0.0;    ///< central coordinate
};

/// The unit vector eta(theta, phi) in C^n described above.  Its squared
/// magnitudes telescope to 1, so the result has Euclidean norm 1.
Eigen::VectorXcd unit_direction(const sphere::SphereContext& ctx,
                                const std::vector<double>&   theta,
                                const std::vector<double>&   phi);

/// The chart embedding into C^{n+1}: the first n entries are
/// sin(rho) * eta(theta, phi), the last is e^{it} cos(rho).  The image
/// always lies on the unit sphere (norm 1 up to 1e-14).
///
/// Preconditions: rho in [0, pi/2], t in [-pi, pi], theta_j in [0, pi/2],
/// phi_k in [0, 2 pi]; out-of-range coordinates raise domain_error.
Eigen::VectorXcd sphere_point(const sphere::SphereContext& ctx,
                              const std::vector<double>& theta, double rho,
                              const std::vector<double>& phi, double t);

/// The rescaled function nu^n f~(rho sqrt(nu), t nu), with f~ the
/// 2 pi-periodic extension of the source in its central variable.
/// Supported in rho <= support_rho() = R / sqrt(nu).
struct ScaledSphereFunction {
    heis::AxialFunction source;
    long long           nu = 1;
    int                 n  = 1;

    double support_rho() const;
    std::complex<double> operator()(double rho, double t) const;
};

/// Builds the rescaled function, checking that the shrunken support
/// R / sqrt(nu) fits inside the chart radius pi/2.  A support that does
/// not fit raises chart_overflow_error carrying the minimal admissible nu
/// (never silently clipped).
ScaledSphereFunction scale_function(const heis::HeisContext& ctx,
                                    const heis::AxialFunction& f,
                                    long long nu);

/// The compensated norm nu^{-n/p'} ||f_nu||_{L^p(sphere)}.  The scaling
/// prefactors cancel analytically, leaving the integral of |f|^p against
/// the chart-distorted weight [sqrt(nu) sin(x/sqrt(nu))]^{2n-1}
/// cos(x/sqrt(nu)), which is strictly below x^{2n-1} and increases with
/// nu.  Hence the value is strictly below the group norm ||f||_p and
/// increases toward it along any nu schedule.
double lemma2_ratio(const heis::HeisContext& ctx, const heis::AxialFunction& f,
                    long long nu, double p, int per_panel = 64);

/// One entry of the projector-norm limit: the compensated sphere-side
/// coefficient nu^{-n/2} ||pi_{(k, N-k)} f_nu||_2, the fixed group-side
/// target ||P_{m,k} f||_2, and their relative gap (absolute gap when the
/// target vanishes).
struct LimitRecord {
    long long nu           = 0;
    double    sphere_value = 0.0;
    double    target       = 0.0;
    double    rel_err      = 0.0;
};

/// Runs the projector-norm limit along a nu schedule.  The total degree
/// grows as N(nu) = |m| nu + 2k, so that N(nu)/nu -> |m| while the
/// bidegree component stays exactly k; positive m selects bidegree
/// (k, N-k), negative m the mirrored (N-k, k), whose kernel is the
/// complex conjugate (running the conjugate source with -m reproduces the
/// positive-m values exactly).  The target is computed once from the
/// group-side kernel; each schedule entry is evaluated independently.
std::vector<LimitRecord> proposition3_harness(const heis::HeisContext&   ctx,
                                              const heis::AxialFunction& f,
                                              long long m, int k,
                                              const std::vector<long long>& nu_schedule,
                                              int per_panel = 48);

/// Diagnostic decomposition of the inner product of two chart images at
/// scale nu: the exact Hermitian inner product of the embedded points
/// against its small-(1/nu) model — modulus cos(|z - w| / sqrt(nu)) and
/// phase (t - t' + Im<z, w>) / nu.  Both remainders decay faster than
/// 1/nu; the operation feeds no other computation.
struct InnerProductExpansion {
    std::complex<double> exact;
    double               modulus_predicted = 0.0;
    double               phase_predicted   = 0.0;
    double               modulus_remainder = 0.0;
    double               phase_remainder   = 0.0;
};

InnerProductExpansion inner_product_expansion(const sphere::SphereContext& ctx,
                                              const ChartPoint& a,
                                              const ChartPoint& b,
                                              long long nu);

/// The reference test function used by the limit harnesses and the CLI:
/// the radial bump (1 - (r/R)^2)^3 on r <= R times the central phase
/// e^{i m t}.  Smooth enough for fast quadrature, with every published
/// number reproducible from (m, R) alone.
heis::AxialFunction standard_test_function(long long m, double radius = 2.5);

} // namespace speclim::contraction
