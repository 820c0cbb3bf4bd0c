//
// Project     : speclim
// File        : tests/test_specfun.cpp
// Description : unit tests for polynomial evaluation, envelope regimes,
//               and the Jacobi-to-Laguerre limit pair
//
// SPDX-License-Identifier: BSD-3-Clause
//

#include <doctest.h>

#include <speclim/specfun.hpp>

#include "support/exact_oracle.hpp"

#include <cmath>
#include <numbers>

using namespace speclim;

TEST_SUITE("specfun") {

TEST_CASE("jacobi values match the exact series oracle")
{
    // Mixed integer and non-integer parameters, interior and endpoint
    // abscissas.  The oracle expands a finite series over exact rationals,
    // so disagreement beyond roundoff would implicate the recurrence.
    const Rational xs[] = {Rational(0), Rational(1), Rational(-1),
                           Rational(1, 3), Rational(-7, 10), Rational(9, 10)};
    const std::pair<Rational, Rational> params[] = {
        {Rational(0), Rational(0)},
        {Rational(1), Rational(2)},
        {Rational(4), Rational(4)},
        {Rational(1, 2), Rational(-1, 4)},
        {Rational(25), Rational(3)},
    };
    for (const auto& [a, b] : params)
        for (int degree : {0, 1, 2, 3, 5, 8, 13, 20})
            for (const Rational& x : xs) {
                const Rational exact = testing::jacobi_series(degree, a, b, x);
                const double got = specfun::jacobi_eval(
                    {degree, to_double(a), to_double(b)}, to_double(x));
                const double want = to_double(exact);
                CAPTURE(degree);
                CHECK(got == doctest::Approx(want).epsilon(1e-12).scale(1.0));
            }
}

TEST_CASE("laguerre values match the exact series oracle")
{
    const Rational xs[] = {Rational(0), Rational(1), Rational(7),
                           Rational(5, 2), Rational(31, 7)};
    const Rational alphas[] = {Rational(0), Rational(1), Rational(3),
                               Rational(-1, 2), Rational(50)};
    for (const Rational& a : alphas)
        for (int k : {0, 1, 2, 3, 5, 8, 13, 20})
            for (const Rational& x : xs) {
                const Rational exact = testing::laguerre_series(k, a, x);
                const double got  = specfun::laguerre_eval(k, to_double(a), to_double(x));
                const double want = to_double(exact);
                CAPTURE(k);
                CHECK(got == doctest::Approx(want).epsilon(1e-12).scale(1.0));
            }
}

TEST_CASE("endpoint and reflection identities")
{
    // P_n^(a,b)(1) = C(n+a, n) and P_n^(a,b)(-x) = (-1)^n P_n^(b,a)(x).
    for (int n : {1, 2, 7, 19})
        for (int a : {0, 1, 3})
            for (int b : {0, 2, 5}) {
                const double at_one = specfun::jacobi_eval({n, double(a), double(b)}, 1.0);
                CHECK(at_one == doctest::Approx(to_double(Rational(binomial(n + a, n))))
                                    .epsilon(1e-13));
                for (double x : {0.25, -0.6}) {
                    const double lhs = specfun::jacobi_eval({n, double(a), double(b)}, -x);
                    const double rhs = specfun::jacobi_eval({n, double(b), double(a)}, x);
                    const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
                    CHECK(lhs == doctest::Approx(sgn * rhs).epsilon(1e-12));
                }
            }
    // L_k^a(0) = C(k+a, k).
    for (int k : {1, 2, 7, 19})
        for (int a : {0, 1, 4})
            CHECK(specfun::laguerre_eval(k, double(a), 0.0)
                  == doctest::Approx(to_double(Rational(binomial(k + a, k)))).epsilon(1e-13));
}

TEST_CASE("input validation and overflow reporting")
{
    CHECK_THROWS_AS(specfun::jacobi_eval({2, -1.0, 0.0}, 0.5), domain_error);
    CHECK_THROWS_AS(specfun::jacobi_eval({2, 0.0, -1.5}, 0.5), domain_error);
    CHECK_THROWS_AS(specfun::jacobi_eval({-1, 0.0, 0.0}, 0.5), domain_error);
    CHECK_THROWS_AS(specfun::laguerre_eval(3, 0.0, -1.0), domain_error);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(specfun::jacobi_eval({2, 0.0, 0.0}, nan), domain_error);
    // A value far outside the representable range must be reported, not
    // returned as infinity.
    CHECK_THROWS_AS(specfun::laguerre_eval(50, 0.0, 1e300), precision_error);
}

TEST_CASE("envelope regimes partition the angle range")
{
    const int degree = 40;
    const double c = 1.0;
    CHECK(specfun::szego_classify(degree, 0.0, c).tag == specfun::SzegoTag::edge_left);
    CHECK(specfun::szego_classify(degree, 0.5 * c / degree, c).tag
          == specfun::SzegoTag::edge_left);
    CHECK(specfun::szego_classify(degree, c / degree, c).tag
          == specfun::SzegoTag::oscillatory);
    CHECK(specfun::szego_classify(degree, 1.5, c).tag == specfun::SzegoTag::oscillatory);
    CHECK(specfun::szego_classify(degree, std::numbers::pi - c / degree, c).tag
          == specfun::SzegoTag::oscillatory);
    CHECK(specfun::szego_classify(degree, std::numbers::pi, c).tag
          == specfun::SzegoTag::edge_right);
    CHECK_THROWS_AS(specfun::szego_classify(degree, -0.1, c), domain_error);
    CHECK_THROWS_AS(specfun::szego_classify(degree, 1.0, 0.0), domain_error);
    CHECK_THROWS_AS(specfun::szego_classify(0, 1.0, c), domain_error);
}

TEST_CASE("envelope bounds the polynomial with a degree-stable constant")
{
    // The envelope deliberately omits its multiplicative constant.  What
    // must hold is that max over theta of |P(cos theta)| / envelope(theta)
    // stays bounded and does not grow as the degree doubles.  Bounds below
    // were pinned from a standalone scan of this implementation.
    const struct { double a, b; } params[] = {{0, 0}, {1, 2}, {0.5, -0.25}, {2, 5}};
    for (auto pr : params) {
        double previous = -1.0;
        for (int degree : {16, 32, 64, 128}) {
            const specfun::JacobiParams jp{degree, pr.a, pr.b};
            double worst = 0.0;
            for (int i = 1; i < 2000; ++i) {
                const double theta = std::numbers::pi * i / 2000.0;
                const double p   = std::fabs(specfun::jacobi_eval(jp, std::cos(theta)));
                const double env = specfun::szego_envelope(jp, theta, 1.0);
                worst = std::max(worst, p / env);
            }
            CAPTURE(pr.a);
            CAPTURE(pr.b);
            CAPTURE(degree);
            CHECK(worst > 0.3);
            CHECK(worst < 1.2);
            if (previous > 0)
                CHECK(worst <= previous * 1.01); // no growth as degree doubles
            previous = worst;
        }
    }
}

TEST_CASE("limit pair converges at the expected first-order rate")
{
    // The discrepancy between the scaled Jacobi value and its
    // Laguerre-times-Gaussian target decays like 1/N, so doubling N should
    // roughly halve the error once N is moderately large.
    for (int k : {1, 2, 3})
        for (int d : {0, 1, 2}) {
            const double x = 1.5;
            double previous = -1.0;
            for (long long N : {200, 400, 800}) {
                const auto [lhs, rhs] = specfun::mehler_heine_pair({N, k + d, k, x});
                const double err = std::fabs(lhs - rhs);
                if (previous > 0) {
                    const double ratio = previous / err;
                    CAPTURE(k);
                    CAPTURE(d);
                    CAPTURE(N);
                    CHECK(ratio > 1.5);
                    CHECK(ratio < 2.8);
                }
                previous = err;
            }
        }
}

TEST_CASE("limit pair validates its index set")
{
    CHECK_THROWS_AS(specfun::mehler_heine_pair({10, 1, 2, 1.0}), domain_error); // j < k
    CHECK_THROWS_AS(specfun::mehler_heine_pair({4, 3, 1, 1.0}), domain_error);  // N <= j+k
    // Both sides are even in x, so a negative abscissa is fine.
    const auto [neg_l, neg_r] = specfun::mehler_heine_pair({100, 2, 1, -0.5});
    const auto [pos_l, pos_r] = specfun::mehler_heine_pair({100, 2, 1, 0.5});
    CHECK(neg_l == pos_l);
    CHECK(neg_r == pos_r);
}

} // TEST_SUITE
