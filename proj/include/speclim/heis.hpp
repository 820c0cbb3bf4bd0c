//
// Project     : speclim
// File        : heis.hpp
// Description : joint spectral data on the reduced Heisenberg group:
//               modes, Laguerre projector kernels, norm brackets, the
//               piecewise-affine exponent laws, divisor sums, and the
//               eigenvalue-aggregation bounds
//
// SPDX-License-Identifier: BSD-3-Clause
//

#pragma once

#include <speclim/bracket.hpp>
#include <speclim/errors.hpp>
#include <speclim/rational.hpp>

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace speclim::heis {

/// The group C^n x T with Haar measure normalized, for functions of
/// (|z|, t), to the density (n/pi) r^(2n-1) over [0, inf) x [-pi, pi].
/// This normalization is the one under which the kernel projectors are
/// idempotent with the kernel constant below.
struct HeisContext {
    int n = 1;
};

/// Index (m, k) of one joint eigenspace: m the central frequency
/// (nonzero), k the Laguerre index.
struct HeisMode {
    long long m = 1;
    int       k = 0;

    friend bool operator==(const HeisMode&, const HeisMode&) = default;
};

/// Joint eigenvalue pair (2|m|(2k+n), m) of the sub-Laplacian and the
/// central derivative on the (m, k) eigenspace.
std::pair<long long, long long> joint_eigenvalues(const HeisContext& ctx,
                                                  const HeisMode&    mode);

/// Evaluable kernel of the projector onto the (m, k) eigenspace:
///   Phi(r, t) = (|m|^n / n!) e^(i m t) L_k^(n-1)(|m| r^2) e^(-|m| r^2 / 2).
/// The constant is fixed by idempotence under the Haar normalization of
/// HeisContext; for m < 0 the phase conjugates automatically, so the
/// modulus and all norms are sign-invariant.
struct LaguerreKernel {
    HeisContext ctx;
    HeisMode    mode;
    double      constant; ///< |m|^n / n!

    /// Real radial profile (the full value at t = 0).
    double radial(double r) const;

    std::complex<double> operator()(double r, double t) const;

    /// Kernel value at the identity = |m|^n C(k+n-1, k) / n!; equals the
    /// squared L^2 norm (idempotence).
    double value_at_zero() const;
};

LaguerreKernel laguerre_kernel(const HeisContext& ctx, const HeisMode& mode);

/// The piecewise-affine norm-growth exponents as functions of u = 1/p
/// on [1/2, 1], with exact rational breakpoints:
///   alpha(u) = 1/4 - u/2            on [1/2, u~]
///            = n(u - 1/2) - 1/2     on [u~, 1]
///   beta(u)  = n(u - 1/2)
///   rho(u)   = (2n+1)(u/2 - 1/4)    on [1/2, u~],  1/2 on [u~, 1]
/// where u~ = 1/p~ and p~ = 2(2n+1)/(2n+3) is the critical exponent.
/// alpha and rho are continuous at u~ with values -1/(2(2n+1)) and 1/2;
/// as a function of p, alpha is V-shaped with its minimum at p~.
struct ExponentProfile {
    int n = 1;

    Rational p_tilde() const;
    Rational u_tilde() const; ///< 1/p_tilde

    Rational alpha(const Rational& u) const;
    Rational beta(const Rational& u) const;
    Rational rho(const Rational& u) const;

    double alpha(double u) const;
    double beta(double u) const;
    double rho(double u) const;
};

ExponentProfile exponent_profile(int n);

/// L^p norm of the kernel over the group, p >= 1: a one-dimensional
/// radial integral with Laguerre-zero panel splits and an adaptive tail
/// extended until its contribution falls below 1e-14 of the total.
/// Resolution failures raise resolution_error.
double phi_lp_norm(const HeisContext& ctx, const HeisMode& mode, double p);

/// Certified bracket for the L^p -> L^2 projector norm, 1 <= p <= 2;
/// same structure as the sphere-side bracket (tight at p = 1 and p = 2).
NormBracket pmk_norm_bracket(const HeisContext& ctx, const HeisMode& mode, double p);

/// The structural norm-growth expression (2k+n)^alpha(1/p) |m|^beta(1/p)
/// with unit constant; the comparison curve for all fitted slopes.
double growth_bound(const HeisContext& ctx, const HeisMode& mode, double p);

/// The divisor-type sum d(N) = sum of 1/D over divisors D of N with
/// D >= n and D = n (mod 2) (i.e. D = 2k+n for some k >= 0), exactly.
struct DivisorSum {
    int       n = 1;
    long long N = 1;
    Rational  value;
};

DivisorSum divisor_sum(const HeisContext& ctx, long long N);

/// Every mode (m, k) with (2k+n)|m| = N, both signs of m, ordered by
/// increasing 2k+n with the positive sign first.
std::vector<HeisMode> qn_modes(const HeisContext& ctx, long long N);

/// Both sides of the exact aggregation identity
///   sum over positive-m modes of m^n (2k+n)^(n-1)  =  N^n d(N),
/// as exact rationals (first = enumerated sum, second = closed form).
std::pair<Rational, Rational> qn_sq_identity(const HeisContext& ctx, long long N);

/// Bound for the norm of the eigenvalue-N projector at exponent p:
/// N^(n(1/p - 1/2)) d(N)^rho(1/p), with unit constant; exactly zero when
/// d(N) = 0 (the projector is empty).
double qn_norm_bound(const HeisContext& ctx, long long N, double p);

/// Aggregations over eigenvalue windows.
enum class AggregateKind {
    cumulative, ///< all eigenvalues <= N; bound N^((n+1)(1/p-1/2))
    mean,       ///< cumulative divided by N; bound N^((n+1)(1/p-1/2)-1)
    band        ///< N1 < eigenvalue <= N2; bound (N2^n (N2-N1))^(1/p-1/2)
};

struct AggregateBound {
    double   bound = 0.0;   ///< the structural bound with unit constant
    Rational square_sum;    ///< exact sum of m^n (2k+n)^(n-1) over the window
};

/// For cumulative/mean pass the window end as N2 (N1 ignored); for band
/// both endpoints are required with N2 > N1 >= n (else domain_error).
AggregateBound aggregate_bound(const HeisContext& ctx, AggregateKind kind,
                               double p, long long N2, long long N1 = 0);

/// Trial-division primality helpers used to tag the special-case rows
/// of the bound tables.
bool is_prime(long long N);
bool is_prime_power(long long N, long long* base = nullptr);

/// Hypothesis flags under which the special-case growth statements for
/// prime / fixed-prime-power eigenvalues are asserted: the two families
/// are stated under different conditions, so rows are tagged rather
/// than suppressed.
bool prime_case_hypothesis(int n);       ///< n > 2 and n odd
bool fixed_prime_case_hypothesis(int n); ///< n == 2, or n > 2 and n odd

//
// axially symmetric functions on the group
//

/// A continuous compactly supported function of (|z|, t) = (r, t),
/// with its support radius and an upper bound on the frequencies it
/// carries in t (a quadrature hint; the refinement guard still checks).
struct AxialFunction {
    std::function<std::complex<double>(double, double)> value;
    double support_radius = 0.0;
    int    t_bandwidth    = 0;
};

/// L^p norm over the group, p >= 1.
double axial_lp_norm(const HeisContext& ctx, const AxialFunction& f, double p,
                     int per_panel = 64);

/// L^2 norm of the projection of f onto the (m, k) eigenspace:
/// |<f, Phi>| / ||Phi||_2 (valid on the axially symmetric class, whose
/// t-invariant projection is spanned by the kernel).
double project_axial(const HeisContext& ctx, const HeisMode& mode,
                     const AxialFunction& f, int per_panel = 64);

} // namespace speclim::heis
