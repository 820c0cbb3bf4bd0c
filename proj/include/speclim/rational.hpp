//
// Project     : speclim
// File        : rational.hpp
// Description : exact integer/rational arithmetic used for identities,
//               dimensions, divisor sums, and exponent breakpoints
//
// SPDX-License-Identifier: BSD-3-Clause
//

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace speclim {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient C(n, k); zero when k < 0 or k > n.
inline Integer binomial(long long n, long long k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Integer result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

/// Exact factorial n!.
inline Integer factorial(long long n)
{
    Integer result = 1;
    for (long long i = 2; i <= n; ++i)
        result *= i;
    return result;
}

/// Exact integer power b^e, e >= 0.
inline Integer ipow(const Integer& b, long long e)
{
    Integer result = 1;
    Integer base   = b;
    for (long long k = e; k > 0; k >>= 1) {
        if (k & 1)
            result *= base;
        if (k > 1)
            base *= base;
    }
    return result;
}

/// Serialize a rational as the canonical fraction string used in all
/// CSV/JSON output: "num/den" in lowest terms, or just "num" when the
/// denominator is one.  Exactness-preserving by construction.
inline std::string to_fraction_string(const Rational& r)
{
    return r.str();
}

/// Nearest double to an exact rational (for plotting/fitting only).
inline double to_double(const Rational& r)
{
    return static_cast<double>(r);
}

} // namespace speclim
