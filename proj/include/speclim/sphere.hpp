//
// Project     : speclim
// File        : sphere.hpp
// Description : spectral data of the bidegree decomposition on the unit
//               sphere of C^(n+1): dimensions, joint eigenvalues, zonal
//               kernels, measure-reduced quadrature, and L^p -> L^2
//               projector norm brackets
//
// SPDX-License-Identifier: BSD-3-Clause
//

#pragma once

#include <speclim/bracket.hpp>
#include <speclim/quadrature.hpp>
#include <speclim/rational.hpp>

#include <complex>
#include <functional>
#include <utility>

namespace speclim::sphere {

/// The ambient setting: the sphere S^(2n+1) in C^(n+1), carrying its
/// invariant probability measure (total mass one).  For functions of the
/// pairing with a fixed pole, the measure reduces to the density
/// (n/pi) sin^(2n-1)(rho) cos(rho) in (rho, t) over [0, pi/2] x [-pi, pi].
struct SphereContext {
    int n = 1;
};

/// Index (l, l') of one subspace of the bidegree decomposition.
struct Bidegree {
    long long l  = 0;
    long long lp = 0;

    long long q() const { return l < lp ? l : lp; }         ///< min(l, l')
    long long Q() const { return l < lp ? lp : l; }         ///< max(l, l')
    long long abs_delta() const { return l < lp ? lp - l : l - lp; }
    /// Frequency of the kernel's phase factor in the angular variable.
    long long phase_frequency() const { return lp - l; }

    friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// Exact dimension of the (l, l') subspace.  Covers the l = 0 and
/// l' = 0 rays and the constants at (0, 0).
Integer dim_h(const SphereContext& ctx, const Bidegree& bd);

/// Joint eigenvalue pair (mu, lambda) of the two commuting Laplacians
/// on the (l, l') subspace:
///   mu     = -(l + l')(l + l' + 2n)
///   lambda = -2 l l' - n (l + l')
std::pair<long long, long long> joint_eigenvalues(const SphereContext& ctx,
                                                  const Bidegree&      bd);

/// Reduced-measure density (n/pi) sin^(2n-1)(rho) cos(rho); the weight
/// against d rho d t for every integral in this module.
double radial_weight(const SphereContext& ctx, double rho);

/// Evaluable kernel of the orthogonal projector onto the (l, l')
/// subspace, as a function of the pairing with the pole:
///   Z(theta, phi) = K e^(i (l'-l) phi) cos^|l-l'|(theta)
///                   P_q^(n-1, |l-l'|)(cos 2 theta)
/// with K fixed so that the reproducing identity holds: the value at the
/// pole equals the subspace dimension, and the squared L^2 norm equals
/// that same value (idempotence of the projector).
struct ZonalKernel {
    SphereContext ctx;
    Bidegree      bd;
    Integer       dimension; ///< value at the pole, exactly
    double        prefactor; ///< K as above

    /// Real radial profile K cos^|delta|(theta) P_q(cos 2 theta).
    double radial(double theta) const;

    /// Full complex value; theta in [0, pi/2], phi periodic.
    std::complex<double> operator()(double theta, double phi) const;

    /// Kernel value at the pole = subspace dimension.
    double value_at_pole() const { return static_cast<double>(dimension); }
};

/// Construct the kernel for a bidegree.
ZonalKernel zonal_kernel(const SphereContext& ctx, const Bidegree& bd);

/// Checked evaluation (theta range enforced).
std::complex<double> zonal_eval(const ZonalKernel& kernel, double theta, double phi);

/// Default grid for integrals of one kernel: Gauss-Legendre panels with
/// boundaries at the kernel's radial zeros (plus a geometric ladder when
/// the kernel concentrates near the pole), so every panel integrand is
/// smooth even for odd powers of the modulus.  Zero per_panel/t_count
/// pick degree-based defaults.
QuadratureGrid zonal_grid(const SphereContext& ctx, const Bidegree& bd,
                          int per_panel = 0, int t_count = 0);

/// Grid resolving two kernels simultaneously (union of their panel cuts).
QuadratureGrid pair_grid(const SphereContext& ctx, const Bidegree& a,
                         const Bidegree& b, int per_panel = 0, int t_count = 0);

/// L^p norm of the kernel under the probability measure, p >= 1; radial
/// quadrature (the modulus does not depend on the angular variable).
/// Every value is recomputed on a refined grid; disagreement beyond
/// resolution_tolerance raises resolution_error.
double zonal_lp_norm(const ZonalKernel& kernel, double p, const QuadratureGrid& grid);

/// Inner product of two kernels over the sphere, reduced to the
/// (rho, t) product rule; zero for distinct bidegrees.
std::complex<double> zonal_inner(const SphereContext& ctx, const Bidegree& a,
                                 const Bidegree& b, const QuadratureGrid& grid);

/// Certified bracket for the L^p -> L^2 norm of the projector,
/// 1 <= p <= 2:
///   lower = ||Z||_2 / ||Z||_p          (the kernel is its own projection)
///   upper = sqrt(||Z||_(p'/2))         (convolution bound)
/// At p = 1 both sides equal sqrt(kernel value at the pole) -- the norm
/// is attained there -- and at p = 2 the bracket is (1, 1).
NormBracket projector_norm_bracket(const SphereContext& ctx, const Bidegree& bd,
                                   double p, const QuadratureGrid& grid);

/// A bounded function of the reduced coordinates (rho, t).
using AxialField = std::function<std::complex<double>(double, double)>;

/// L^2 norm of the projection of an axially symmetric function:
/// ||projection of F||_2 = |<F, Z>| / ||Z||_2, via the product rule
/// (valid because the projector's t-invariant range is spanned by the
/// zonal kernel alone).
double project_axial(const SphereContext& ctx, const Bidegree& bd,
                     const AxialField& field, const QuadratureGrid& grid);

} // namespace speclim::sphere
