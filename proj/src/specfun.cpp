//
// Project     : speclim
// File        : specfun.cpp
// Description : Jacobi/Laguerre evaluation, envelopes, limit pair
//
// SPDX-License-Identifier: BSD-3-Clause
//

#include <speclim/specfun.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace speclim::specfun {

namespace {

// b^e for integer e >= 0 with a possibly negative base; sign handled
// explicitly so no reliance on pow()'s integral-exponent special case.
long double pow_integer(long double b, long long e)
{
    if (e == 0)
        return 1.0L;
    if (b == 0.0L)
        return 0.0L;
    const long double magnitude = std::exp(static_cast<long double>(e) * std::log(std::fabs(b)));
    return (b < 0.0L && (e & 1)) ? -magnitude : magnitude;
}

void require_parameter_above_minus_one(double value, const char* name)
{
    if (!(value > -1.0))
        throw domain_error(std::string(name) + " must exceed -1, got " + std::to_string(value));
}

double finished(long double value, const char* what)
{
    if (!std::isfinite(static_cast<double>(value)))
        throw precision_error(std::string(what) + " recurrence left the representable range");
    return static_cast<double>(value);
}

} // namespace

double JacobiParams::phase_frequency() const
{
    return degree + (alpha + beta + 1.0) / 2.0;
}

double JacobiParams::phase_offset() const
{
    return -(alpha + 0.5) * std::numbers::pi / 2.0;
}

double jacobi_eval(const JacobiParams& params, double x)
{
    if (params.degree < 0)
        throw domain_error("jacobi_eval: degree must be non-negative");
    require_parameter_above_minus_one(params.alpha, "jacobi_eval: alpha");
    require_parameter_above_minus_one(params.beta, "jacobi_eval: beta");
    if (!std::isfinite(x))
        throw domain_error("jacobi_eval: argument must be finite");

    const long double value = jacobi<long double>(params.degree, params.alpha, params.beta, x);
    return finished(value, "jacobi_eval");
}

double laguerre_eval(int k, double alpha, double x)
{
    if (k < 0)
        throw domain_error("laguerre_eval: degree must be non-negative");
    require_parameter_above_minus_one(alpha, "laguerre_eval: alpha");
    if (!(x >= 0.0) || !std::isfinite(x))
        throw domain_error("laguerre_eval: argument must be finite and >= 0");

    const long double value = laguerre<long double>(k, alpha, x);
    return finished(value, "laguerre_eval");
}

SzegoRegime szego_classify(int degree, double theta, double c)
{
    if (!(c > 0.0) || !(c < std::numbers::pi))
        throw domain_error("szego_classify: cut parameter must lie in (0, pi)");
    if (degree < 1)
        throw domain_error("szego_classify: degree must be >= 1");
    if (!(theta >= 0.0) || !(theta <= std::numbers::pi))
        throw domain_error("szego_classify: angle must lie in [0, pi]");

    const double cut = c / degree;
    if (theta < cut)
        return {SzegoTag::edge_left, c};
    if (theta > std::numbers::pi - cut)
        return {SzegoTag::edge_right, c};
    return {SzegoTag::oscillatory, c};
}

double szego_envelope(const JacobiParams& params, double theta, double c)
{
    require_parameter_above_minus_one(params.alpha, "szego_envelope: alpha");
    require_parameter_above_minus_one(params.beta, "szego_envelope: beta");

    const SzegoRegime regime = szego_classify(params.degree, theta, c);
    const double      l      = params.degree;

    switch (regime.tag) {
        case SzegoTag::edge_left:
            return std::pow(l, params.alpha);
        case SzegoTag::edge_right:
            return std::pow(l, params.beta);
        case SzegoTag::oscillatory:
            break;
    }

    const double half_sin = std::sin(theta / 2.0);
    const double half_cos = std::cos(theta / 2.0);
    const double full_sin = std::sin(theta);
    if (!(half_sin > 0.0) || !(half_cos > 0.0) || !(full_sin > 0.0))
        throw singular_envelope_error(
            "szego_envelope: oscillatory angular factor is singular at theta = "
            + std::to_string(theta));

    const double angular = std::sqrt(std::numbers::pi)
                           * std::pow(half_sin, -params.alpha - 0.5)
                           * std::pow(half_cos, -params.beta - 0.5);
    return std::pow(l, -0.5) * angular * (1.0 + 1.0 / (l * full_sin));
}

std::pair<double, double> mehler_heine_pair(const MehlerHeinePair& p)
{
    if (p.k < 0 || p.j < p.k)
        throw domain_error("mehler_heine_pair: need j >= k >= 0");
    const long long big = p.N - p.j - p.k;
    if (big < 1)
        throw domain_error("mehler_heine_pair: need N - j - k >= 1");

    const long double b = static_cast<long double>(big);
    const long double a = static_cast<long double>(p.j - p.k);
    const long double s = p.x / std::sqrt(b);

    const long double scaled_jacobi =
        pow_integer(std::cos(s), big)
        * jacobi<long double>(p.k, a, b, std::cos(2.0L * s));

    const long double laguerre_gauss =
        laguerre<long double>(p.k, a, static_cast<long double>(p.x) * p.x)
        * std::exp(-static_cast<long double>(p.x) * p.x / 2.0L);

    return {finished(scaled_jacobi, "mehler_heine_pair"),
            finished(laguerre_gauss, "mehler_heine_pair")};
}

} // namespace speclim::specfun
