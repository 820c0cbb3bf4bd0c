//
// Project     : speclim
// File        : heis.cpp
// Description : Laguerre kernels, exponent laws, divisor sums,
//               aggregation bounds, axial quadrature
//
// SPDX-License-Identifier: BSD-3-Clause
//

#include <speclim/heis.hpp>
#include <speclim/quadrature.hpp>
#include <speclim/specfun.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace speclim::heis {

namespace {

void require_context(const HeisContext& ctx)
{
    if (ctx.n < 1)
        throw domain_error("heis: context dimension n must be >= 1");
}

void require_mode(const HeisMode& mode)
{
    if (mode.m == 0)
        throw domain_error("heis: central frequency m must be nonzero");
    if (mode.k < 0)
        throw domain_error("heis: Laguerre index k must be non-negative");
}

void require_norm_exponent_range(double p, const char* what)
{
    if (!(p >= 1.0) || !(p <= 2.0))
        throw domain_error(std::string(what) + ": exponent must lie in [1, 2]");
}

Rational require_u_range(const Rational& u, const char* what)
{
    if (u < Rational(1, 2) || u > 1)
        throw domain_error(std::string(what) + ": u = 1/p must lie in [1/2, 1]");
    return u;
}

double require_u_range(double u, const char* what)
{
    if (!(u >= 0.5) || !(u <= 1.0))
        throw domain_error(std::string(what) + ": u = 1/p must lie in [1/2, 1]");
    return u;
}

// Divisors D of N of the form 2k+n (D >= n, same parity as n), ascending.
std::vector<long long> admissible_divisors(int n, long long N)
{
    std::vector<long long> divisors;
    for (long long i = 1; i * i <= N; ++i) {
        if (N % i != 0)
            continue;
        divisors.push_back(i);
        if (i != N / i)
            divisors.push_back(N / i);
    }
    std::sort(divisors.begin(), divisors.end());

    std::vector<long long> admissible;
    for (long long d : divisors)
        if (d >= n && (d - n) % 2 == 0)
            admissible.push_back(d);
    return admissible;
}

// Integral of |L_k^(n-1)(s)|^p e^(-p s / 2) s^(n-1) over [0, inf):
// Gauss-Legendre panels split at the Laguerre zeros (kinks of the odd
// powers of the modulus), then a doubling tail extended until its
// contribution drops below 1e-14 of the running total.
double laguerre_radial_integral(int k, int n, double p, int per_panel)
{
    const double alpha = n - 1.0;

    const auto integrand = [&](double s) {
        return std::pow(std::fabs(specfun::laguerre<long double>(k, static_cast<long double>(alpha),
                                                                 static_cast<long double>(s))),
                        static_cast<long double>(p))
               * std::exp(-p * s / 2.0) * std::pow(s, alpha);
    };

    const quad::Rule1D& rule = quad::gauss_legendre(per_panel);
    const auto          panel = [&](double a, double b) {
        const double center = (a + b) / 2.0;
        const double half   = (b - a) / 2.0;
        double       sum    = 0.0;
        for (int i = 0; i < per_panel; ++i)
            sum += half * rule.weights[i] * integrand(center + half * rule.nodes[i]);
        return sum;
    };

    std::vector<double> cuts;
    cuts.push_back(0.0);
    const Eigen::ArrayXd zeros = quad::laguerre_zeros(k, alpha);
    for (Eigen::Index i = 0; i < zeros.size(); ++i)
        cuts.push_back(zeros[i]);
    const double body_end = std::max((zeros.size() ? zeros[zeros.size() - 1] : 0.0) * 1.25 + 1.0,
                                     (8.0 + 4.0 * n) / p);
    cuts.push_back(body_end);

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += panel(cuts[i], cuts[i + 1]);

    double start = body_end;
    for (int doubling = 0;; ++doubling) {
        if (doubling > 60)
            throw resolution_error("laguerre_radial_integral: tail truncation "
                                   "bound 1e-14 not reached");
        const double piece = panel(start, 2.0 * start);
        total += piece;
        start *= 2.0;
        if (std::fabs(piece) <= 1e-14 * std::fabs(total))
            break;
    }
    return total;
}

} // namespace

std::pair<long long, long long> joint_eigenvalues(const HeisContext& ctx,
                                                  const HeisMode&    mode)
{
    require_context(ctx);
    require_mode(mode);
    const long long absm = mode.m < 0 ? -mode.m : mode.m;
    return {2 * absm * (2 * mode.k + ctx.n), mode.m};
}

double LaguerreKernel::radial(double r) const
{
    const double s = std::fabs(static_cast<double>(mode.m)) * r * r;
    return constant
           * static_cast<double>(specfun::laguerre<long double>(
               mode.k, ctx.n - 1.0L, static_cast<long double>(s)))
           * std::exp(-s / 2.0);
}

std::complex<double> LaguerreKernel::operator()(double r, double t) const
{
    return radial(r) * std::polar(1.0, static_cast<double>(mode.m) * t);
}

double LaguerreKernel::value_at_zero() const
{
    return constant
           * static_cast<double>(binomial(mode.k + ctx.n - 1, mode.k));
}

LaguerreKernel laguerre_kernel(const HeisContext& ctx, const HeisMode& mode)
{
    require_context(ctx);
    require_mode(mode);

    LaguerreKernel kernel;
    kernel.ctx  = ctx;
    kernel.mode = mode;
    // |m|^n / n!, the constant forced by idempotence under the Haar
    // normalization of HeisContext.
    const long long absm = mode.m < 0 ? -mode.m : mode.m;
    kernel.constant =
        to_double(Rational(ipow(absm, ctx.n)) / Rational(factorial(ctx.n)));
    return kernel;
}

Rational ExponentProfile::p_tilde() const
{
    return Rational(2 * (2 * n + 1), 2 * n + 3);
}

Rational ExponentProfile::u_tilde() const
{
    return Rational(2 * n + 3, 2 * (2 * n + 1));
}

Rational ExponentProfile::alpha(const Rational& u) const
{
    require_u_range(u, "alpha");
    if (u <= u_tilde())
        return Rational(1, 4) - u / 2;
    return Rational(n) * (u - Rational(1, 2)) - Rational(1, 2);
}

Rational ExponentProfile::beta(const Rational& u) const
{
    require_u_range(u, "beta");
    return Rational(n) * (u - Rational(1, 2));
}

Rational ExponentProfile::rho(const Rational& u) const
{
    require_u_range(u, "rho");
    if (u <= u_tilde())
        return Rational(2 * n + 1) * (u / 2 - Rational(1, 4));
    return Rational(1, 2);
}

double ExponentProfile::alpha(double u) const
{
    require_u_range(u, "alpha");
    return u <= to_double(u_tilde()) ? 0.25 - u / 2.0 : n * (u - 0.5) - 0.5;
}

double ExponentProfile::beta(double u) const
{
    require_u_range(u, "beta");
    return n * (u - 0.5);
}

double ExponentProfile::rho(double u) const
{
    require_u_range(u, "rho");
    return u <= to_double(u_tilde()) ? (2.0 * n + 1.0) * (u / 2.0 - 0.25) : 0.5;
}

ExponentProfile exponent_profile(int n)
{
    if (n < 1)
        throw domain_error("exponent_profile: dimension n must be >= 1");
    return ExponentProfile{n};
}

double phi_lp_norm(const HeisContext& ctx, const HeisMode& mode, double p)
{
    require_context(ctx);
    require_mode(mode);
    if (!(p >= 1.0))
        throw domain_error("phi_lp_norm: exponent must be >= 1");

    const LaguerreKernel kernel = laguerre_kernel(ctx, mode);
    const long long      absm   = mode.m < 0 ? -mode.m : mode.m;

    // ||Phi||_p^p = n A^p |m|^(-n) * integral (substitution s = |m| r^2).
    const auto compute = [&](int per_panel) {
        const double integral = laguerre_radial_integral(mode.k, ctx.n, p, per_panel);
        const double norm = std::pow(ctx.n * std::pow(kernel.constant, p)
                                         * std::pow(static_cast<double>(absm), -ctx.n)
                                         * integral,
                                     1.0 / p);
        if (!std::isfinite(norm))
            throw precision_error("phi_lp_norm: value left the representable range");
        return norm;
    };

    const double base    = compute(64);
    const double refined = compute(128);
    require_resolved(base, refined, refined, "phi_lp_norm");
    return refined;
}

NormBracket pmk_norm_bracket(const HeisContext& ctx, const HeisMode& mode, double p)
{
    require_norm_exponent_range(p, "pmk_norm_bracket");

    const LaguerreKernel kernel = laguerre_kernel(ctx, mode);
    const double         l2     = std::sqrt(kernel.value_at_zero());

    if (p == 2.0)
        return {p, 1.0, 1.0};
    if (p == 1.0)
        return {p, l2, l2};

    const double conjugate_half = p / (2.0 * (p - 1.0)); // p'/2
    return {p, l2 / phi_lp_norm(ctx, mode, p),
            std::sqrt(phi_lp_norm(ctx, mode, conjugate_half))};
}

double growth_bound(const HeisContext& ctx, const HeisMode& mode, double p)
{
    require_context(ctx);
    require_mode(mode);
    require_norm_exponent_range(p, "growth_bound");

    const ExponentProfile profile = exponent_profile(ctx.n);
    const double          u       = 1.0 / p;
    const long long       absm    = mode.m < 0 ? -mode.m : mode.m;
    return std::pow(2.0 * mode.k + ctx.n, profile.alpha(u))
           * std::pow(static_cast<double>(absm), profile.beta(u));
}

DivisorSum divisor_sum(const HeisContext& ctx, long long N)
{
    require_context(ctx);
    if (N < 1)
        throw domain_error("divisor_sum: N must be >= 1");

    DivisorSum sum;
    sum.n = ctx.n;
    sum.N = N;
    for (long long d : admissible_divisors(ctx.n, N))
        sum.value += Rational(1, d);
    return sum;
}

std::vector<HeisMode> qn_modes(const HeisContext& ctx, long long N)
{
    require_context(ctx);
    if (N < 1)
        throw domain_error("qn_modes: N must be >= 1");

    std::vector<HeisMode> modes;
    for (long long d : admissible_divisors(ctx.n, N)) {
        const int       k = static_cast<int>((d - ctx.n) / 2);
        const long long m = N / d;
        modes.push_back({m, k});
        modes.push_back({-m, k});
    }
    return modes;
}

std::pair<Rational, Rational> qn_sq_identity(const HeisContext& ctx, long long N)
{
    require_context(ctx);
    if (N < 1)
        throw domain_error("qn_sq_identity: N must be >= 1");

    Rational enumerated = 0;
    for (long long d : admissible_divisors(ctx.n, N))
        enumerated += Rational(ipow(N / d, ctx.n) * ipow(d, ctx.n - 1));

    const Rational closed = Rational(ipow(N, ctx.n)) * divisor_sum(ctx, N).value;
    return {enumerated, closed};
}

double qn_norm_bound(const HeisContext& ctx, long long N, double p)
{
    require_norm_exponent_range(p, "qn_norm_bound");

    const DivisorSum d = divisor_sum(ctx, N);
    if (d.value == 0)
        return 0.0; // the projector is empty

    const ExponentProfile profile = exponent_profile(ctx.n);
    const double          u       = 1.0 / p;
    return std::pow(static_cast<double>(N), ctx.n * (u - 0.5))
           * std::pow(to_double(d.value), profile.rho(u));
}

AggregateBound aggregate_bound(const HeisContext& ctx, AggregateKind kind,
                               double p, long long N2, long long N1)
{
    require_context(ctx);
    require_norm_exponent_range(p, "aggregate_bound");
    if (N2 < 1)
        throw domain_error("aggregate_bound: window end must be >= 1");
    if (kind == AggregateKind::band && !(N2 > N1 && N1 >= ctx.n))
        throw domain_error("aggregate_bound: band requires N2 > N1 >= n");

    const double u     = 1.0 / p;
    const double shift = u - 0.5;

    AggregateBound result;
    switch (kind) {
        case AggregateKind::cumulative:
            result.bound = std::pow(static_cast<double>(N2), (ctx.n + 1) * shift);
            break;
        case AggregateKind::mean:
            result.bound =
                std::pow(static_cast<double>(N2), (ctx.n + 1) * shift - 1.0);
            break;
        case AggregateKind::band:
            result.bound = std::pow(std::pow(static_cast<double>(N2), ctx.n)
                                        * static_cast<double>(N2 - N1),
                                    shift);
            break;
    }

    const long long window_start = kind == AggregateKind::band ? N1 : 0;
    for (long long value = window_start + 1; value <= N2; ++value)
        result.square_sum += qn_sq_identity(ctx, value).first;
    return result;
}

bool is_prime(long long N)
{
    if (N < 2)
        return false;
    for (long long i = 2; i * i <= N; ++i)
        if (N % i == 0)
            return false;
    return true;
}

bool is_prime_power(long long N, long long* base)
{
    if (N < 2)
        return false;
    long long smallest = N;
    for (long long i = 2; i * i <= N; ++i)
        if (N % i == 0) {
            smallest = i;
            break;
        }
    long long rest = N;
    while (rest % smallest == 0)
        rest /= smallest;
    if (rest != 1)
        return false;
    if (base)
        *base = smallest;
    return true;
}

bool prime_case_hypothesis(int n)
{
    return n > 2 && n % 2 == 1;
}

bool fixed_prime_case_hypothesis(int n)
{
    return n == 2 || (n > 2 && n % 2 == 1);
}

namespace {

QuadratureGrid axial_grid(const HeisContext& ctx, const AxialFunction& f,
                          int per_panel, long long extra_frequency)
{
    require_context(ctx);
    if (!f.value)
        throw domain_error("heis: axial function is empty");
    if (!(f.support_radius > 0.0))
        throw domain_error("heis: axial function needs a positive support radius");
    if (f.t_bandwidth < 0)
        throw domain_error("heis: axial function bandwidth must be non-negative");

    const double R = f.support_radius;
    const long long extra = extra_frequency < 0 ? -extra_frequency : extra_frequency;
    const int t_count = static_cast<int>(
        std::min<long long>(2 * (f.t_bandwidth + extra) + 17, 200001));
    return make_grid({0.0, R / 3.0, 2.0 * R / 3.0, R}, per_panel, t_count);
}

double haar_weight(const HeisContext& ctx, double r)
{
    return ctx.n / std::numbers::pi * std::pow(r, 2.0 * ctx.n - 1.0);
}

} // namespace

double axial_lp_norm(const HeisContext& ctx, const AxialFunction& f, double p,
                     int per_panel)
{
    if (!(p >= 1.0))
        throw domain_error("axial_lp_norm: exponent must be >= 1");

    const QuadratureGrid grid = axial_grid(ctx, f, per_panel, 0);
    const auto           compute = [&](const QuadratureGrid& g) {
        const double integral = integrate_product(g, [&](double r, double t) {
            return std::pow(std::abs(f.value(r, t)), p) * haar_weight(ctx, r);
        });
        return std::pow(integral, 1.0 / p);
    };

    const double base    = compute(grid);
    const double refined = compute(grid.refined());
    require_resolved(base, refined, refined, "axial_lp_norm");
    return refined;
}

double project_axial(const HeisContext& ctx, const HeisMode& mode,
                     const AxialFunction& f, int per_panel)
{
    require_mode(mode);

    const LaguerreKernel kernel = laguerre_kernel(ctx, mode);
    const double         l2     = std::sqrt(kernel.value_at_zero());
    const QuadratureGrid grid   = axial_grid(ctx, f, per_panel, mode.m);

    double field_l2_scale = 0.0;

    const auto numerator = [&](const QuadratureGrid& g, bool record_scale) {
        Eigen::ArrayXd profile(g.rho_nodes.size());
        Eigen::ArrayXd measure(g.rho_nodes.size());
        for (Eigen::Index i = 0; i < g.rho_nodes.size(); ++i) {
            profile[i] = kernel.radial(g.rho_nodes[i]);
            measure[i] = haar_weight(ctx, g.rho_nodes[i]);
        }

        std::complex<double> total    = 0.0;
        double               field_sq = 0.0;
        for (int j = 0; j < g.t_count; ++j) {
            const double         t     = g.t_node(j);
            std::complex<double> slice = 0.0;
            for (Eigen::Index i = 0; i < g.rho_nodes.size(); ++i) {
                const std::complex<double> value = f.value(g.rho_nodes[i], t);
                slice += g.rho_weights[i] * measure[i] * value * profile[i];
                if (record_scale)
                    field_sq += g.rho_weights[i] * measure[i] * std::norm(value);
            }
            total += g.t_weight()
                     * std::polar(1.0, -static_cast<double>(mode.m) * t) * slice;
        }
        if (record_scale)
            field_l2_scale = std::sqrt(std::max(0.0, field_sq) * g.t_weight());
        return total;
    };

    const std::complex<double> base    = numerator(grid, true);
    const std::complex<double> refined = numerator(grid.refined(), false);
    const double               scale   = std::max(l2 * field_l2_scale, 1e-300);
    require_resolved(std::abs(base), std::abs(refined), scale, "heis project_axial");
    return std::abs(refined) / l2;
}

} // namespace speclim::heis
