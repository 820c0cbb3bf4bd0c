//
// Project     : speclim
// File        : contraction.cpp
// Description : Chart embedding, concentration rescaling, and the
//               norm- and projector-limit harnesses
//
// SPDX-License-Identifier: BSD-3-Clause
//

#include <speclim/contraction.hpp>
#include <speclim/quadrature.hpp>
#include <speclim/rational.hpp>
#include <speclim/specfun.hpp>

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <string>

namespace speclim::contraction {

namespace {

constexpr double pi         = std::numbers::pi;
constexpr double coord_slack = 1e-12;

void require_angles(const sphere::SphereContext& ctx,
                    const std::vector<double>& theta,
                    const std::vector<double>& phi)
{
    if (ctx.n < 1)
        throw domain_error("contraction: context dimension n must be >= 1");
    if (static_cast<int>(theta.size()) != ctx.n - 1)
        throw domain_error("contraction: expected n-1 polar angles");
    if (static_cast<int>(phi.size()) != ctx.n)
        throw domain_error("contraction: expected n phases");
    for (double th : theta)
        if (!(th >= -coord_slack) || !(th <= pi / 2 + coord_slack))
            throw domain_error("contraction: polar angles must lie in [0, pi/2]");
    for (double ph : phi)
        if (!(ph >= -coord_slack) || !(ph <= 2 * pi + coord_slack))
            throw domain_error("contraction: phases must lie in [0, 2 pi]");
}

void require_function(const heis::AxialFunction& f)
{
    if (!f.value)
        throw domain_error("contraction: axial function is empty");
    if (!(f.support_radius > 0.0))
        throw domain_error("contraction: axial function needs a positive support radius");
    if (f.t_bandwidth < 0)
        throw domain_error("contraction: axial function bandwidth must be non-negative");
}

// Chart-distorted radial weight [sqrt(nu) sin(x/sqrt(nu))]^{2n-1}
// cos(x/sqrt(nu)); strictly below x^{2n-1} for x > 0 and pointwise
// increasing in nu (so compensated sphere norms rise toward group norms).
double chart_weight(int n, long long nu, double x)
{
    const double root = std::sqrt(static_cast<double>(nu));
    return std::pow(root * std::sin(x / root), 2.0 * n - 1.0)
           * std::cos(x / root);
}

int central_count(const heis::AxialFunction& f, double p, long long extra)
{
    const long long oscillation =
        static_cast<long long>(std::ceil(p)) * f.t_bandwidth
        + (extra < 0 ? -extra : extra);
    return static_cast<int>(std::min<long long>(2 * oscillation + 17, 200001));
}

} // namespace

Eigen::VectorXcd unit_direction(const sphere::SphereContext& ctx,
                                const std::vector<double>&   theta,
                                const std::vector<double>&   phi)
{
    require_angles(ctx, theta, phi);

    // Magnitude of the j-th entry: sines of all polar angles above level j,
    // and the cosine of the angle at level j-1 (absent for the first entry).
    Eigen::VectorXcd eta(ctx.n);
    for (int j = 0; j < ctx.n; ++j) {
        double magnitude = 1.0;
        for (int i = j; i < ctx.n - 1; ++i)
            magnitude *= std::sin(theta[i]);
        if (j > 0)
            magnitude *= std::cos(theta[j - 1]);
        eta[j] = magnitude * std::polar(1.0, phi[j]);
    }
    return eta;
}

Eigen::VectorXcd sphere_point(const sphere::SphereContext& ctx,
                              const std::vector<double>& theta, double rho,
                              const std::vector<double>& phi, double t)
{
    if (!(rho >= -coord_slack) || !(rho <= pi / 2 + coord_slack))
        throw domain_error("sphere_point: radial coordinate must lie in [0, pi/2]");
    if (!(t >= -pi - coord_slack) || !(t <= pi + coord_slack))
        throw domain_error("sphere_point: central coordinate must lie in [-pi, pi]");

    const Eigen::VectorXcd eta = unit_direction(ctx, theta, phi);

    Eigen::VectorXcd point(ctx.n + 1);
    point.head(ctx.n) = std::sin(rho) * eta;
    point[ctx.n]      = std::polar(std::cos(rho), t);
    return point;
}

double ScaledSphereFunction::support_rho() const
{
    return source.support_radius / std::sqrt(static_cast<double>(nu));
}

std::complex<double> ScaledSphereFunction::operator()(double rho, double t) const
{
    const double root = std::sqrt(static_cast<double>(nu));
    const double r    = rho * root;
    if (r > source.support_radius)
        return 0.0;
    // Periodic extension of the central variable back into [-pi, pi].
    const double s = std::remainder(t * static_cast<double>(nu), 2.0 * pi);
    return std::pow(static_cast<double>(nu), n) * source.value(r, s);
}

ScaledSphereFunction scale_function(const heis::HeisContext& ctx,
                                    const heis::AxialFunction& f,
                                    long long nu)
{
    if (ctx.n < 1)
        throw domain_error("scale_function: context dimension n must be >= 1");
    require_function(f);
    if (nu < 1)
        throw domain_error("scale_function: scale nu must be >= 1");

    const double needed = std::pow(2.0 * f.support_radius / pi, 2.0);
    if (f.support_radius / std::sqrt(static_cast<double>(nu)) > pi / 2) {
        const long long minimal =
            static_cast<long long>(std::ceil(needed - 1e-12));
        throw chart_overflow_error(
            "scale_function: support radius " + std::to_string(f.support_radius)
                + " exceeds the chart at nu = " + std::to_string(nu)
                + "; minimal admissible nu = " + std::to_string(minimal),
            minimal);
    }

    ScaledSphereFunction scaled;
    scaled.source = f;
    scaled.nu     = nu;
    scaled.n      = ctx.n;
    return scaled;
}

double lemma2_ratio(const heis::HeisContext& ctx, const heis::AxialFunction& f,
                    long long nu, double p, int per_panel)
{
    if (!(p >= 1.0))
        throw domain_error("lemma2_ratio: exponent must be >= 1");
    scale_function(ctx, f, nu); // validates inputs and the chart fit

    // After substituting x = rho sqrt(nu), s = t nu, every power of nu
    // cancels and the compensated norm becomes the group-side integral of
    // |f|^p against the chart-distorted weight on the original support.
    const double         R    = f.support_radius;
    const QuadratureGrid grid = make_grid({0.0, R / 3.0, 2.0 * R / 3.0, R},
                                          per_panel, central_count(f, p, 0));

    const auto compute = [&](const QuadratureGrid& g) {
        const double integral = integrate_product(g, [&](double x, double s) {
            return std::pow(std::abs(f.value(x, s)), p)
                   * (ctx.n / pi) * chart_weight(ctx.n, nu, x);
        });
        return std::pow(integral, 1.0 / p);
    };

    const double base    = compute(grid);
    const double refined = compute(grid.refined());
    require_resolved(base, refined, refined, "lemma2_ratio");
    return refined;
}

namespace {

// Compensated sphere-side coefficient for one schedule entry.  In the
// substituted variables the integrand is the source function against the
// degree-N zonal radial profile and the chart weight; the central-phase
// factor collapses to e^{-i m s} because N - 2k is an exact multiple of
// nu, which also makes the midpoint rule exact in s.
double sphere_side_value(const heis::HeisContext&   ctx,
                         const heis::AxialFunction& f, long long m, int k,
                         long long nu, int per_panel)
{
    const long long absm = m < 0 ? -m : m;
    const long long N    = absm * nu + 2 * k;

    const sphere::SphereContext sctx{ctx.n};
    const sphere::Bidegree      bd = m > 0
                                         ? sphere::Bidegree{k, N - k}
                                         : sphere::Bidegree{N - k, k};
    const Integer  dimension = sphere::dim_h(sctx, bd);
    const double   prefactor = to_double(
        Rational(dimension) / binomial(bd.q() + ctx.n - 1, bd.q()));
    const long long delta = bd.abs_delta();
    const double    root  = std::sqrt(static_cast<double>(nu));

    const auto zonal_radial = [&](double x) {
        const double angle = x / root;
        return prefactor
               * std::pow(std::max(0.0, std::cos(angle)),
                          static_cast<double>(delta))
               * static_cast<double>(specfun::jacobi<long double>(
                   static_cast<int>(bd.q()), ctx.n - 1.0L,
                   static_cast<long double>(delta),
                   static_cast<long double>(std::cos(2.0 * angle))));
    };

    const double         R    = f.support_radius;
    const QuadratureGrid grid = make_grid({0.0, R / 3.0, 2.0 * R / 3.0, R},
                                          per_panel,
                                          central_count(f, 1.0, absm));

    double mass = 0.0; // L^1 bound of the integrand, used as guard scale

    const auto coefficient = [&](const QuadratureGrid& g, bool record_mass) {
        Eigen::ArrayXd profile(g.rho_nodes.size());
        Eigen::ArrayXd weight(g.rho_nodes.size());
        for (Eigen::Index i = 0; i < g.rho_nodes.size(); ++i) {
            profile[i] = zonal_radial(g.rho_nodes[i]);
            weight[i] =
                (ctx.n / pi) * chart_weight(ctx.n, nu, g.rho_nodes[i]);
        }

        std::complex<double> total     = 0.0;
        double               total_abs = 0.0;
        const double         sign      = m > 0 ? -1.0 : 1.0;
        for (int j = 0; j < g.t_count; ++j) {
            const double         s     = g.t_node(j);
            std::complex<double> slice = 0.0;
            double               slice_abs = 0.0;
            for (Eigen::Index i = 0; i < g.rho_nodes.size(); ++i) {
                const std::complex<double> value =
                    f.value(g.rho_nodes[i], s);
                const double piece = g.rho_weights[i] * weight[i];
                slice += piece * value * profile[i];
                if (record_mass)
                    slice_abs +=
                        piece * std::abs(value) * std::fabs(profile[i]);
            }
            total += g.t_weight()
                     * std::polar(1.0, sign * static_cast<double>(absm) * s)
                     * slice;
            total_abs += g.t_weight() * slice_abs;
        }
        if (record_mass)
            mass = total_abs;
        return total;
    };

    const std::complex<double> base    = coefficient(grid, true);
    const std::complex<double> refined = coefficient(grid.refined(), false);
    require_resolved(std::abs(base), std::abs(refined),
                     std::max(mass, 1e-300), "proposition3 sphere side");

    return std::abs(refined)
           / std::sqrt(to_double(Rational(dimension)))
           / std::pow(static_cast<double>(nu), ctx.n / 2.0);
}

} // namespace

std::vector<LimitRecord> proposition3_harness(const heis::HeisContext&   ctx,
                                              const heis::AxialFunction& f,
                                              long long m, int k,
                                              const std::vector<long long>& nu_schedule,
                                              int per_panel)
{
    if (m == 0)
        throw domain_error("proposition3_harness: central frequency m must be nonzero");
    if (k < 0)
        throw domain_error("proposition3_harness: Laguerre index k must be non-negative");
    if (nu_schedule.empty())
        throw domain_error("proposition3_harness: empty nu schedule");
    require_function(f);
    for (long long nu : nu_schedule)
        scale_function(ctx, f, nu); // fail fast on chart overflow

    const double target = heis::project_axial(ctx, {m, k}, f);

    std::vector<std::future<double>> jobs;
    jobs.reserve(nu_schedule.size());
    for (long long nu : nu_schedule)
        jobs.push_back(std::async(std::launch::async, [&, nu] {
            return sphere_side_value(ctx, f, m, k, nu, per_panel);
        }));

    std::vector<LimitRecord> records;
    records.reserve(nu_schedule.size());
    for (std::size_t i = 0; i < nu_schedule.size(); ++i) {
        LimitRecord record;
        record.nu           = nu_schedule[i];
        record.sphere_value = jobs[i].get();
        record.target       = target;
        record.rel_err      = target > 0.0
                                  ? std::fabs(record.sphere_value - target) / target
                                  : std::fabs(record.sphere_value);
        records.push_back(record);
    }
    return records;
}

InnerProductExpansion inner_product_expansion(const sphere::SphereContext& ctx,
                                              const ChartPoint& a,
                                              const ChartPoint& b,
                                              long long nu)
{
    if (nu < 1)
        throw domain_error("inner_product_expansion: scale nu must be >= 1");
    if (!(a.rho >= 0.0) || !(b.rho >= 0.0))
        throw domain_error("inner_product_expansion: radial coordinates must be >= 0");

    const double root = std::sqrt(static_cast<double>(nu));

    const Eigen::VectorXcd pa =
        sphere_point(ctx, a.theta, a.rho / root, a.phi,
                     a.t / static_cast<double>(nu));
    const Eigen::VectorXcd pb =
        sphere_point(ctx, b.theta, b.rho / root, b.phi,
                     b.t / static_cast<double>(nu));

    const Eigen::VectorXcd za = a.rho * unit_direction(ctx, a.theta, a.phi);
    const Eigen::VectorXcd zb = b.rho * unit_direction(ctx, b.theta, b.phi);

    InnerProductExpansion result;
    result.exact = pb.dot(pa); // Eigen conjugates its first argument
    const std::complex<double> cross = zb.dot(za); // sum z_j conj(w_j)

    result.modulus_predicted = std::cos((za - zb).norm() / root);
    result.phase_predicted =
        (a.t - b.t + cross.imag()) / static_cast<double>(nu);

    result.modulus_remainder =
        std::fabs(std::abs(result.exact) - result.modulus_predicted);
    double phase_gap =
        std::arg(result.exact) - result.phase_predicted;
    phase_gap = std::remainder(phase_gap, 2.0 * pi);
    result.phase_remainder = std::fabs(phase_gap);
    return result;
}

heis::AxialFunction standard_test_function(long long m, double radius)
{
    if (!(radius > 0.0))
        throw domain_error("standard_test_function: radius must be positive");

    heis::AxialFunction f;
    f.support_radius = radius;
    f.t_bandwidth    = m < 0 ? -m : m;
    f.value          = [m, radius](double r, double t) -> std::complex<double> {
        if (r > radius)
            return 0.0;
        const double u = 1.0 - (r / radius) * (r / radius);
        return u * u * u * std::polar(1.0, static_cast<double>(m) * t);
    };
    return f;
}

} // namespace speclim::contraction
