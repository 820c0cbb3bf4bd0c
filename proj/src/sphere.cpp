//
// Project     : speclim
// File        : sphere.cpp
// Description : bidegree dimensions, zonal kernels, reduced-measure
//               quadrature, norm brackets
//
// SPDX-License-Identifier: BSD-3-Clause
//

#include <speclim/sphere.hpp>
#include <speclim/specfun.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace speclim::sphere {

namespace {

constexpr double theta_slack = 1e-12;

void require_context(const SphereContext& ctx)
{
    if (ctx.n < 1)
        throw domain_error("sphere: context dimension n must be >= 1");
}

void require_bidegree(const Bidegree& bd)
{
    if (bd.l < 0 || bd.lp < 0)
        throw domain_error("sphere: bidegree components must be non-negative");
}

// Integer value of an exact rational that is an integer by construction.
Integer exact_integer(const Rational& value, const char* what)
{
    if (boost::multiprecision::denominator(value) != 1)
        throw precision_error(std::string(what) + ": expected an integer value");
    return boost::multiprecision::numerator(value);
}

int capped_count(long long suggested)
{
    return static_cast<int>(std::min<long long>(suggested, 200001));
}

// Panel boundaries for integrals of one kernel: the radial zeros of the
// kernel (kinks of odd powers of its modulus) plus, when the large
// cos^|delta| factor concentrates the mass near the pole, a geometric
// ladder resolving that concentration scale.
std::vector<double> panel_cuts(const SphereContext& ctx, const Bidegree& bd)
{
    const int       q     = static_cast<int>(bd.q());
    const long long delta = bd.abs_delta();

    std::vector<double> cuts;
    cuts.push_back(0.0);
    cuts.push_back(std::numbers::pi / 2.0);

    const Eigen::ArrayXd zeros =
        quad::jacobi_zeros(q, ctx.n - 1.0, static_cast<double>(delta));
    for (Eigen::Index i = 0; i < zeros.size(); ++i)
        cuts.push_back(std::acos(std::clamp(zeros[i], -1.0, 1.0)) / 2.0);

    if (delta > 32) {
        const double scale = 2.0 / std::sqrt(static_cast<double>(delta) + 1.0);
        for (double x = scale; x < 0.999 * std::numbers::pi / 2.0; x *= 2.0)
            cuts.push_back(x);
    }

    std::sort(cuts.begin(), cuts.end());
    std::vector<double> merged;
    for (double c : cuts)
        if (merged.empty() || c - merged.back() > 1e-9)
            merged.push_back(c);
    return merged;
}

} // namespace

Integer dim_h(const SphereContext& ctx, const Bidegree& bd)
{
    require_context(ctx);
    require_bidegree(bd);

    const long long l = bd.l, lp = bd.lp, n = ctx.n;
    if (l == 0 && lp == 0)
        return 1;
    // Rays: one degree zero.  The binomial below is pinned by the
    // requirement that the dimensions at fixed total degree N sum to the
    // dimension of the degree-N harmonic space in 2n+2 real variables
    // (and, equivalently, by the reproducing identity at the pole).
    if (l == 0)
        return binomial(lp + n, lp);
    if (lp == 0)
        return binomial(l + n, l);

    Rational value = Rational(n) * (l + lp + n);
    value /= Rational(l) * lp;
    value *= Rational(binomial(l + n - 1, l - 1));
    value *= Rational(binomial(lp + n - 1, lp - 1));
    return exact_integer(value, "dim_h");
}

std::pair<long long, long long> joint_eigenvalues(const SphereContext& ctx,
                                                  const Bidegree&      bd)
{
    require_context(ctx);
    require_bidegree(bd);

    const long long sum = bd.l + bd.lp;
    return {-sum * (sum + 2 * ctx.n), -2 * bd.l * bd.lp - ctx.n * sum};
}

double radial_weight(const SphereContext& ctx, double rho)
{
    return ctx.n / std::numbers::pi
           * std::pow(std::sin(rho), 2.0 * ctx.n - 1.0) * std::cos(rho);
}

double ZonalKernel::radial(double theta) const
{
    const double    c     = std::max(0.0, std::cos(theta));
    const long long delta = bd.abs_delta();
    const long double jac = specfun::jacobi<long double>(
        static_cast<int>(bd.q()), ctx.n - 1.0L,
        static_cast<long double>(delta), std::cos(2.0L * static_cast<long double>(theta)));
    return prefactor * std::pow(c, static_cast<double>(delta))
           * static_cast<double>(jac);
}

std::complex<double> ZonalKernel::operator()(double theta, double phi) const
{
    return radial(theta)
           * std::polar(1.0, static_cast<double>(bd.phase_frequency()) * phi);
}

ZonalKernel zonal_kernel(const SphereContext& ctx, const Bidegree& bd)
{
    require_context(ctx);
    require_bidegree(bd);

    ZonalKernel kernel;
    kernel.ctx       = ctx;
    kernel.bd        = bd;
    kernel.dimension = dim_h(ctx, bd);

    // Normalization fixed by the reproducing identity: the value at the
    // pole must equal the dimension, hence K = dim / P_q(1) with
    // P_q^(n-1, |delta|)(1) = C(q + n - 1, q).
    const Rational K = Rational(kernel.dimension)
                       / Rational(binomial(bd.q() + ctx.n - 1, bd.q()));
    kernel.prefactor = to_double(K);
    return kernel;
}

std::complex<double> zonal_eval(const ZonalKernel& kernel, double theta, double phi)
{
    if (!(theta >= -theta_slack) || !(theta <= std::numbers::pi / 2.0 + theta_slack))
        throw domain_error("zonal_eval: theta must lie in [0, pi/2]");
    if (!std::isfinite(phi))
        throw domain_error("zonal_eval: phi must be finite");
    return kernel(std::clamp(theta, 0.0, std::numbers::pi / 2.0), phi);
}

QuadratureGrid zonal_grid(const SphereContext& ctx, const Bidegree& bd,
                          int per_panel, int t_count)
{
    require_context(ctx);
    require_bidegree(bd);
    if (per_panel <= 0)
        per_panel = 32;
    if (t_count <= 0)
        t_count = capped_count(2 * bd.abs_delta() + 17);
    return make_grid(panel_cuts(ctx, bd), per_panel, t_count);
}

QuadratureGrid pair_grid(const SphereContext& ctx, const Bidegree& a,
                         const Bidegree& b, int per_panel, int t_count)
{
    require_context(ctx);
    if (per_panel <= 0)
        per_panel = 32;
    if (t_count <= 0)
        t_count = capped_count(a.abs_delta() + b.abs_delta() + 17);

    std::vector<double> cuts   = panel_cuts(ctx, a);
    std::vector<double> others = panel_cuts(ctx, b);
    cuts.insert(cuts.end(), others.begin(), others.end());
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> merged;
    for (double c : cuts)
        if (merged.empty() || c - merged.back() > 1e-9)
            merged.push_back(c);
    return make_grid(std::move(merged), per_panel, t_count);
}

double zonal_lp_norm(const ZonalKernel& kernel, double p, const QuadratureGrid& grid)
{
    if (!(p >= 1.0))
        throw domain_error("zonal_lp_norm: exponent must be >= 1");

    const double two_n = 2.0 * kernel.ctx.n;
    const auto   compute = [&](const QuadratureGrid& g) {
        const double integral = integrate_radial(g, [&](double rho) {
            return std::pow(std::fabs(kernel.radial(rho)), p)
                   * std::pow(std::sin(rho), 2.0 * kernel.ctx.n - 1.0)
                   * std::cos(rho);
        });
        const double norm = std::pow(two_n * integral, 1.0 / p);
        if (!std::isfinite(norm))
            throw precision_error("zonal_lp_norm: value left the representable range");
        return norm;
    };

    const double base    = compute(grid);
    const double refined = compute(grid.refined());
    require_resolved(base, refined, refined, "zonal_lp_norm");
    return refined;
}

std::complex<double> zonal_inner(const SphereContext& ctx, const Bidegree& a,
                                 const Bidegree& b, const QuadratureGrid& grid)
{
    const ZonalKernel ka = zonal_kernel(ctx, a);
    const ZonalKernel kb = zonal_kernel(ctx, b);
    const long long   df = a.phase_frequency() - b.phase_frequency();

    const auto compute = [&](const QuadratureGrid& g) {
        std::complex<double> phase_sum = 0.0;
        for (int j = 0; j < g.t_count; ++j)
            phase_sum += g.t_weight()
                         * std::polar(1.0, static_cast<double>(df) * g.t_node(j));

        const double radial_int = integrate_radial(g, [&](double rho) {
            return ka.radial(rho) * kb.radial(rho)
                   * std::pow(std::sin(rho), 2.0 * ctx.n - 1.0) * std::cos(rho);
        });
        return ctx.n / std::numbers::pi * phase_sum * radial_int;
    };

    const std::complex<double> base    = compute(grid);
    const std::complex<double> refined = compute(grid.refined());
    const double               scale =
        std::sqrt(static_cast<double>(ka.dimension) * static_cast<double>(kb.dimension));
    require_resolved(std::abs(base), std::abs(refined), scale, "zonal_inner");
    return refined;
}

NormBracket projector_norm_bracket(const SphereContext& ctx, const Bidegree& bd,
                                   double p, const QuadratureGrid& grid)
{
    if (!(p >= 1.0) || !(p <= 2.0))
        throw domain_error("projector_norm_bracket: exponent must lie in [1, 2]");

    const ZonalKernel kernel = zonal_kernel(ctx, bd);
    const double      l2     = std::sqrt(static_cast<double>(kernel.dimension));

    if (p == 2.0)
        return {p, 1.0, 1.0};
    if (p == 1.0) {
        // The L^1 -> L^2 norm is attained: it equals sqrt of the kernel
        // value at the pole on both sides (test function and sup bound).
        return {p, l2, l2};
    }

    const double conjugate_half = p / (2.0 * (p - 1.0)); // p'/2
    const double lower          = l2 / zonal_lp_norm(kernel, p, grid);
    const double upper = std::sqrt(zonal_lp_norm(kernel, conjugate_half, grid));
    return {p, lower, upper};
}

double project_axial(const SphereContext& ctx, const Bidegree& bd,
                     const AxialField& field, const QuadratureGrid& grid)
{
    const ZonalKernel kernel = zonal_kernel(ctx, bd);
    const double      l2     = std::sqrt(static_cast<double>(kernel.dimension));
    const double      fz     = static_cast<double>(bd.phase_frequency());

    double field_l2_scale = 0.0;

    const auto numerator = [&](const QuadratureGrid& g, bool record_scale) {
        Eigen::ArrayXd profile(g.rho_nodes.size());
        Eigen::ArrayXd measure(g.rho_nodes.size());
        for (Eigen::Index i = 0; i < g.rho_nodes.size(); ++i) {
            const double rho = g.rho_nodes[i];
            profile[i] = kernel.radial(rho);
            measure[i] = radial_weight(ctx, rho);
        }

        std::complex<double> total    = 0.0;
        double               field_sq = 0.0;
        for (int j = 0; j < g.t_count; ++j) {
            const double         t     = g.t_node(j);
            std::complex<double> slice = 0.0;
            for (Eigen::Index i = 0; i < g.rho_nodes.size(); ++i) {
                const std::complex<double> value = field(g.rho_nodes[i], t);
                slice += g.rho_weights[i] * measure[i] * value * profile[i];
                if (record_scale)
                    field_sq += g.rho_weights[i] * measure[i] * std::norm(value);
            }
            total += g.t_weight() * std::polar(1.0, -fz * t) * slice;
        }
        if (record_scale)
            field_l2_scale = std::sqrt(std::max(0.0, field_sq) * g.t_weight());
        return total;
    };

    const std::complex<double> base    = numerator(grid, true);
    const std::complex<double> refined = numerator(grid.refined(), false);
    const double               scale   = std::max(l2 * field_l2_scale, 1e-300);
    require_resolved(std::abs(base), std::abs(refined), scale, "project_axial");
    return std::abs(refined) / l2;
}

} // namespace speclim::sphere
