//
// Project     : speclim
// File        : specfun.hpp
// Description : Jacobi and Laguerre polynomial evaluation, three-regime
//               asymptotic envelopes, and the large-parameter limit pair
//               connecting the two families
//
// SPDX-License-Identifier: BSD-3-Clause
//

#pragma once

#include <speclim/errors.hpp>

#include <utility>

namespace speclim::specfun {

/// Parameter triple of a Jacobi polynomial P_degree^(alpha, beta).
/// Both parameters must exceed -1 for the weight to be integrable.
struct JacobiParams {
    int    degree = 0;
    double alpha  = 0.0;
    double beta   = 0.0;

    /// Frequency of the oscillatory-branch phase: degree + (alpha+beta+1)/2.
    double phase_frequency() const;
    /// Offset of the oscillatory-branch phase: -(alpha + 1/2) * pi/2.
    double phase_offset() const;
};

/// The three ranges of the polar angle on which a degree-l Jacobi
/// polynomial obeys qualitatively different envelope bounds.
enum class SzegoTag {
    edge_left,   ///< theta below c/l: polynomial-endpoint growth l^alpha
    oscillatory, ///< interior: amplitude l^(-1/2) times an angular factor
    edge_right   ///< theta above pi - c/l: endpoint growth l^beta
};

struct SzegoRegime {
    SzegoTag tag;
    double   c; ///< the interior cut parameter, in (0, pi)
};

/// Index set of one instance of the Jacobi-to-Laguerre limit: as N grows
/// with (j, k, x) fixed, cos^(N-j-k)(x/sqrt(N-j-k)) * P_k^(j-k, N-j-k)
/// evaluated at cos(2x/sqrt(N-j-k)) converges to L_k^(j-k)(x^2) e^(-x^2/2).
struct MehlerHeinePair {
    long long N = 0;
    int       j = 0; ///< j >= k
    int       k = 0;
    double    x = 0.0;
};

//
// scalar-templated cores
//
// Free functions over an arbitrary real scalar, evaluated by the standard
// three-term recurrence in the degree.  Forward recurrence is stable in
// every regime this library exercises: small degree with (possibly huge)
// positive parameters.  No input validation; use the checked wrappers
// below for anything user-facing.
//

template <typename Scalar>
Scalar jacobi(int degree, Scalar alpha, Scalar beta, Scalar x)
{
    if (degree == 0)
        return Scalar(1);

    const Scalar ab = alpha + beta;
    Scalar pm1 = Scalar(1);
    Scalar p   = (alpha + 1) + (ab + 2) * (x - 1) / 2;

    for (int m = 2; m <= degree; ++m) {
        const Scalar a  = 2 * m + ab;
        const Scalar c1 = 2 * m * (m + ab) * (a - 2);
        const Scalar c2 = (a - 1) * (a * (a - 2) * x + alpha * alpha - beta * beta);
        const Scalar c3 = 2 * (m + alpha - 1) * (m + beta - 1) * a;
        const Scalar pn = (c2 * p - c3 * pm1) / c1;
        pm1 = p;
        p   = pn;
    }
    return p;
}

template <typename Scalar>
Scalar laguerre(int k, Scalar alpha, Scalar x)
{
    if (k == 0)
        return Scalar(1);

    Scalar lm1 = Scalar(1);
    Scalar l   = 1 + alpha - x;

    for (int m = 1; m < k; ++m) {
        const Scalar ln = ((2 * m + 1 + alpha - x) * l - (m + alpha) * lm1) / (m + 1);
        lm1 = l;
        l   = ln;
    }
    return l;
}

//
// checked interface
//

/// Jacobi polynomial value; extended-precision recurrence.
/// Throws domain_error when a parameter is <= -1 (or any input is not
/// finite) and precision_error when the recurrence leaves the
/// representable range.
double jacobi_eval(const JacobiParams& params, double x);

/// Generalized Laguerre polynomial value; same error contract, with the
/// additional precondition x >= 0.
double laguerre_eval(int k, double alpha, double x);

/// Which envelope regime the angle theta falls in for the given degree.
/// Total on theta in [0, pi]; the regime boundaries belong to the
/// oscillatory range.  Throws domain_error for c outside (0, pi),
/// degree < 1, or theta outside [0, pi].
SzegoRegime szego_classify(int degree, double theta, double c);

/// The structural envelope magnitude for |P_degree^(alpha,beta)(cos theta)|
/// in the regime that theta falls in:
///   edge_left    l^alpha
///   oscillatory  l^(-1/2) * sqrt(pi) * sin(theta/2)^(-alpha-1/2)
///                * cos(theta/2)^(-beta-1/2) * (1 + 1/(l sin theta))
///   edge_right   l^beta
/// The implied multiplicative constant is deliberately not included; the
/// test suite checks its empirical stability instead.
/// Throws singular_envelope_error if the oscillatory formula is evaluated
/// where its angular factor blows up.
double szego_envelope(const JacobiParams& params, double theta, double c);

/// Both sides of the limit identity described at MehlerHeinePair:
/// first = scaled Jacobi value, second = Laguerre-times-Gaussian target.
std::pair<double, double> mehler_heine_pair(const MehlerHeinePair& p);

} // namespace speclim::specfun
