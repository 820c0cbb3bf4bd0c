//
// Project     : speclim
// File        : cli.cpp
// Description : Command dispatch, deterministic CSV/JSON rendering, and
//               the sweep drivers behind every subcommand
//
// SPDX-License-Identifier: BSD-3-Clause
//

#include <speclim/cli.hpp>

#include <speclim/contraction.hpp>
#include <speclim/errors.hpp>
#include <speclim/fit.hpp>
#include <speclim/heis.hpp>
#include <speclim/rational.hpp>
#include <speclim/specfun.hpp>
#include <speclim/sphere.hpp>

#include "CLI11.hpp"
#include "json.hpp"

#include <array>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace speclim::cli {

namespace {

// ---------------------------------------------------------------------
// formatting and rendering
// ---------------------------------------------------------------------

// Shortest round-trip decimal form; locale-independent and therefore
// byte-stable across runs and machines.
std::string format_double(double v)
{
    std::array<char, 64> buf;
    const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), result.ptr);
}

std::string format_fixed(double v, int digits)
{
    std::array<char, 64> buf;
    const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                      std::chars_format::fixed, digits);
    return std::string(buf.data(), result.ptr);
}

struct Table {
    std::string                           name;
    std::vector<std::string>              headers;
    std::vector<std::vector<std::string>> rows;
};

struct RunResult {
    std::string              command;
    std::vector<Table>       tables;
    std::vector<std::string> notes;
    bool                     pass = true;
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void render_csv(const RunResult& r, std::ostream& os)
{
    for (const Table& table : r.tables) {
        os << "# table: " << table.name << '\n';
        for (std::size_t i = 0; i < table.headers.size(); ++i)
            os << (i ? "," : "") << csv_field(table.headers[i]);
        os << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << csv_field(row[i]);
            os << '\n';
        }
    }
    for (const std::string& note : r.notes)
        os << "# note: " << note << '\n';
    os << "# pass: " << (r.pass ? "true" : "false") << '\n';
}

void render_json(const RunResult& r, std::ostream& os)
{
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    doc["command"]        = r.command;
    doc["tables"]         = nlohmann::ordered_json::array();
    for (const Table& table : r.tables) {
        nlohmann::ordered_json jt;
        jt["name"]    = table.name;
        jt["headers"] = table.headers;
        jt["rows"]    = table.rows;
        doc["tables"].push_back(jt);
    }
    doc["notes"] = r.notes;
    doc["pass"]  = r.pass;
    os << doc.dump(2) << '\n';
}

// ---------------------------------------------------------------------
// flag-value parsing
// ---------------------------------------------------------------------

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string              current;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

long long parse_int(const std::string& s, const char* what)
{
    long long  value = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw domain_error(std::string(what) + ": expected an integer, got '" + s + "'");
    return value;
}

double parse_real(const std::string& s, const char* what)
{
    try {
        std::size_t  consumed = 0;
        const double value    = std::stod(s, &consumed);
        if (consumed != s.size())
            throw std::invalid_argument(s);
        return value;
    } catch (const std::exception&) {
        throw domain_error(std::string(what) + ": expected a number, got '" + s + "'");
    }
}

std::vector<long long> parse_int_list(const std::string& s, const char* what)
{
    std::vector<long long> values;
    for (const std::string& part : split(s, ','))
        values.push_back(parse_int(part, what));
    if (values.empty())
        throw domain_error(std::string(what) + ": empty list");
    return values;
}

std::pair<long long, long long> parse_int_range(const std::string& s, const char* what)
{
    const auto parts = split(s, ':');
    if (parts.size() != 2)
        throw domain_error(std::string(what) + ": expected a range a:b, got '" + s + "'");
    const long long lo = parse_int(parts[0], what);
    const long long hi = parse_int(parts[1], what);
    if (lo < 1 || hi < lo)
        throw domain_error(std::string(what) + ": range must satisfy 1 <= a <= b");
    return {lo, hi};
}

// Dyadic sweep values lo, 2lo, 4lo, ... up to hi.
std::vector<long long> dyadic_values(long long lo, long long hi)
{
    std::vector<long long> values;
    for (long long v = lo; v <= hi; v *= 2)
        values.push_back(v);
    return values;
}

std::string slope_note(const fit::ExponentReport& report)
{
    return "slope=" + format_fixed(report.fit.slope, 2) + "±"
           + format_fixed(report.fit.slope_stderr, 2)
           + ", predicted=" + format_fixed(report.predicted, 2) + ", "
           + (report.pass ? "PASS" : "FAIL");
}

// ---------------------------------------------------------------------
// specfun commands
// ---------------------------------------------------------------------

RunResult run_specfun_eval(const std::string& jacobi_spec,
                           const std::string& laguerre_spec, double x)
{
    RunResult r;
    r.command = "specfun eval";

    if (jacobi_spec.empty() == laguerre_spec.empty())
        throw domain_error("specfun eval: give exactly one of "
                           "--jacobi degree,alpha,beta or --laguerre degree,alpha");

    Table t;
    t.name = "evaluation";
    if (!jacobi_spec.empty()) {
        const auto parts = split(jacobi_spec, ',');
        if (parts.size() != 3)
            throw domain_error("specfun eval: --jacobi expects degree,alpha,beta");
        specfun::JacobiParams params;
        params.degree = static_cast<int>(parse_int(parts[0], "--jacobi degree"));
        params.alpha  = parse_real(parts[1], "--jacobi alpha");
        params.beta   = parse_real(parts[2], "--jacobi beta");
        const double value = specfun::jacobi_eval(params, x);
        t.headers = {"family", "degree", "alpha", "beta", "x", "value"};
        t.rows    = {{"jacobi", std::to_string(params.degree),
                      format_double(params.alpha), format_double(params.beta),
                      format_double(x), format_double(value)}};
    } else {
        const auto parts = split(laguerre_spec, ',');
        if (parts.size() != 2)
            throw domain_error("specfun eval: --laguerre expects degree,alpha");
        const int    k     = static_cast<int>(parse_int(parts[0], "--laguerre degree"));
        const double alpha = parse_real(parts[1], "--laguerre alpha");
        const double value = specfun::laguerre_eval(k, alpha, x);
        t.headers = {"family", "degree", "alpha", "x", "value"};
        t.rows    = {{"laguerre", std::to_string(k), format_double(alpha),
                      format_double(x), format_double(value)}};
    }
    r.tables.push_back(std::move(t));
    return r;
}

RunResult run_specfun_mehler(int k, int j, double x, const std::string& n_list)
{
    RunResult r;
    r.command = "specfun mehler-sweep";

    const std::vector<long long> schedule = parse_int_list(n_list, "--N");

    Table t;
    t.name    = "limit_pair";
    t.headers = {"N", "lhs", "rhs", "abs_err"};

    bool   decreasing = true;
    double previous   = 0.0;
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        const auto [lhs, rhs] =
            specfun::mehler_heine_pair({schedule[i], j, k, x});
        const double err = std::fabs(lhs - rhs);
        t.rows.push_back({std::to_string(schedule[i]), format_double(lhs),
                          format_double(rhs), format_double(err)});
        if (i > 0 && err > previous)
            decreasing = false;
        previous = err;
    }
    r.tables.push_back(std::move(t));
    r.notes.push_back(std::string("abs_err decreasing: ")
                      + (decreasing ? "yes" : "no"));
    return r;
}

// ---------------------------------------------------------------------
// sphere commands
// ---------------------------------------------------------------------

RunResult run_sphere_dims(int n, long long lmax)
{
    if (lmax < 0)
        throw domain_error("sphere dims: --lmax must be >= 0");

    RunResult r;
    r.command = "sphere dims";

    const sphere::SphereContext ctx{n};
    Table                       t;
    t.name    = "bidegree_table";
    t.headers = {"l", "lprime", "dimension", "eigenvalue_mu", "eigenvalue_lambda"};
    for (long long l = 0; l <= lmax; ++l)
        for (long long lp = 0; lp <= lmax; ++lp) {
            const sphere::Bidegree bd{l, lp};
            const auto [mu, lambda] = sphere::joint_eigenvalues(ctx, bd);
            t.rows.push_back({std::to_string(l), std::to_string(lp),
                              sphere::dim_h(ctx, bd).str(),
                              std::to_string(mu), std::to_string(lambda)});
        }
    r.tables.push_back(std::move(t));
    return r;
}

RunResult run_sphere_zonal(int n, const std::string& bd_spec, double theta,
                           double phi)
{
    const auto parts = split(bd_spec, ',');
    if (parts.size() != 2)
        throw domain_error("sphere zonal: --bd expects l,lprime");
    const sphere::Bidegree bd{parse_int(parts[0], "--bd l"),
                              parse_int(parts[1], "--bd lprime")};

    RunResult r;
    r.command = "sphere zonal";

    const sphere::SphereContext ctx{n};
    const sphere::ZonalKernel   kernel = sphere::zonal_kernel(ctx, bd);
    const std::complex<double>  value  = sphere::zonal_eval(kernel, theta, phi);

    Table t;
    t.name    = "kernel_value";
    t.headers = {"l", "lprime", "theta", "phi", "re", "im", "abs"};
    t.rows    = {{std::to_string(bd.l), std::to_string(bd.lp),
                  format_double(theta), format_double(phi),
                  format_double(value.real()), format_double(value.imag()),
                  format_double(std::abs(value))}};
    r.tables.push_back(std::move(t));
    return r;
}

RunResult run_sphere_norm_sweep(int n, const std::string& ray, double p,
                                const std::string& lrange, int nodes,
                                double tolerance)
{
    if (ray != "diagonal" && ray != "holomorphic")
        throw domain_error("sphere norm-sweep: --ray must be diagonal or holomorphic");

    const auto [lo, hi] = parse_int_range(lrange, "--lrange");
    const std::vector<long long> values = dyadic_values(lo, hi);

    RunResult r;
    r.command = "sphere norm-sweep";

    const sphere::SphereContext ctx{n};

    struct Row {
        long long                l = 0;
        double                   axis = 0.0;
        double                   lower = 0.0;
        double                   upper = 0.0;
        bool                     ok = true;
        std::string              status = "ok";
    };

    std::vector<std::future<Row>> jobs;
    for (long long l : values)
        jobs.push_back(std::async(std::launch::async, [&, l] {
            Row row;
            row.l = l;
            const sphere::Bidegree bd =
                ray == "diagonal" ? sphere::Bidegree{l, l} : sphere::Bidegree{0, l};
            row.axis = ray == "diagonal" ? static_cast<double>(2 * l + n)
                                         : static_cast<double>(l + n);
            const QuadratureGrid grid = sphere::zonal_grid(ctx, bd, nodes);
            const NormBracket bracket =
                sphere::projector_norm_bracket(ctx, bd, p, grid);
            row.lower = bracket.lower;
            row.upper = bracket.upper;
            return row;
        }));

    Table t;
    t.name    = "norm_bracket_sweep";
    t.headers = {"l", "axis", "lower", "upper", "status"};

    std::vector<std::pair<double, double>> sweep;
    for (auto& job : jobs) {
        Row row;
        try {
            row = job.get();
        } catch (const error& e) {
            row.ok     = false;
            row.status = std::string("error: ") + e.what();
            r.pass     = false;
        }
        t.rows.push_back({std::to_string(row.l),
                          row.ok ? format_double(row.axis) : "",
                          row.ok ? format_double(row.lower) : "",
                          row.ok ? format_double(row.upper) : "", row.status});
        if (row.ok)
            sweep.emplace_back(row.axis, row.upper);
    }
    r.tables.push_back(std::move(t));

    if (sweep.size() < 3) {
        r.notes.push_back("fit skipped: fewer than 3 resolved rows");
        r.pass = false;
        return r;
    }

    const std::string axis_name = ray == "diagonal" ? "2l+n" : "l+n";
    if (p == 1.0) {
        const double predicted =
            ray == "diagonal" ? n - 0.5 : n / 2.0;
        const fit::ExponentReport report =
            fit::exponent_report(axis_name, sweep, predicted, tolerance);
        r.notes.push_back(slope_note(report));
        r.pass = r.pass && report.pass;
    } else {
        const fit::SlopeFit f = fit::loglog_fit(sweep);
        r.notes.push_back("slope=" + format_fixed(f.slope, 2) + "±"
                          + format_fixed(f.slope_stderr, 2)
                          + " (informational; no predicted exponent at p="
                          + format_double(p) + ")");
    }
    return r;
}

// ---------------------------------------------------------------------
// heis commands
// ---------------------------------------------------------------------

RunResult run_heis_exponents(int n)
{
    RunResult r;
    r.command = "heis exponents";

    const heis::ExponentProfile profile = heis::exponent_profile(n);
    const Rational              ut      = profile.u_tilde();

    Table t;
    t.name    = "exponent_profile";
    t.headers = {"quantity", "value"};
    const auto add = [&](const char* q, const Rational& v) {
        t.rows.push_back({q, to_fraction_string(v)});
    };
    add("p_tilde", profile.p_tilde());
    add("u_tilde", ut);
    add("alpha_at_u_tilde", profile.alpha(ut));
    add("rho_at_u_tilde", profile.rho(ut));
    add("alpha_at_half", profile.alpha(Rational(1, 2)));
    add("beta_at_half", profile.beta(Rational(1, 2)));
    add("rho_at_half", profile.rho(Rational(1, 2)));
    add("alpha_at_1", profile.alpha(Rational(1)));
    add("beta_at_1", profile.beta(Rational(1)));
    add("rho_at_1", profile.rho(Rational(1)));
    r.tables.push_back(std::move(t));
    return r;
}

RunResult run_heis_dN(int n, const std::string& n_spec)
{
    RunResult r;
    r.command = "heis dN";

    const heis::HeisContext ctx{n};

    long long lo = 0;
    long long hi = 0;
    if (n_spec.find(':') != std::string::npos) {
        std::tie(lo, hi) = parse_int_range(n_spec, "--N");
    } else {
        lo = hi = parse_int(n_spec, "--N");
    }

    Table t;
    t.name    = "divisor_sum";
    t.headers = {"N", "dN", "mode_count"};
    for (long long value = lo; value <= hi; ++value) {
        const heis::DivisorSum d = heis::divisor_sum(ctx, value);
        t.rows.push_back({std::to_string(value), to_fraction_string(d.value),
                          std::to_string(heis::qn_modes(ctx, value).size())});
    }
    r.tables.push_back(std::move(t));
    return r;
}

RunResult run_heis_qn_check(int n, const std::string& range_spec)
{
    RunResult r;
    r.command = "heis qn-check";

    const auto [lo, hi] = parse_int_range(range_spec, "--N");

    const heis::HeisContext ctx{n};
    long long               checked = 0;
    long long               passed  = 0;
    std::vector<long long>  failures;
    for (long long value = lo; value <= hi; ++value) {
        ++checked;
        const auto [enumerated, closed] = heis::qn_sq_identity(ctx, value);
        if (enumerated == closed)
            ++passed;
        else
            failures.push_back(value);
    }

    Table t;
    t.name    = "identity_check";
    t.headers = {"checked", "passed", "failed"};
    t.rows    = {{std::to_string(checked), std::to_string(passed),
                  std::to_string(checked - passed)}};
    r.tables.push_back(std::move(t));

    r.notes.push_back(std::to_string(passed) + "/" + std::to_string(checked)
                      + " identities " + (failures.empty() ? "PASS" : "FAIL")
                      + " (exact)");
    for (long long value : failures)
        r.notes.push_back("identity fails at N = " + std::to_string(value));
    r.pass = failures.empty();
    return r;
}

RunResult run_heis_norm_sweep(int n, const std::string& sweep_axis, double p,
                              const std::string& range_spec, long long m_fixed,
                              int k_fixed, double tolerance)
{
    if (sweep_axis != "k" && sweep_axis != "m")
        throw domain_error("heis norm-sweep: --sweep must be k or m");

    const auto [lo, hi] = parse_int_range(range_spec, "--range");
    const std::vector<long long> values = dyadic_values(lo, hi);

    RunResult r;
    r.command = "heis norm-sweep";

    const heis::HeisContext ctx{n};

    struct Row {
        long long   value = 0;
        double      axis = 0.0;
        double      lower = 0.0;
        double      upper = 0.0;
        double      growth = 0.0;
        bool        ok = true;
        std::string status = "ok";
    };

    std::vector<std::future<Row>> jobs;
    for (long long value : values)
        jobs.push_back(std::async(std::launch::async, [&, value] {
            Row row;
            row.value = value;
            const heis::HeisMode mode =
                sweep_axis == "k"
                    ? heis::HeisMode{m_fixed, static_cast<int>(value)}
                    : heis::HeisMode{value, k_fixed};
            row.axis = sweep_axis == "k"
                           ? static_cast<double>(2 * value + n)
                           : static_cast<double>(value);
            const NormBracket bracket = heis::pmk_norm_bracket(ctx, mode, p);
            row.lower  = bracket.lower;
            row.upper  = bracket.upper;
            row.growth = heis::growth_bound(ctx, mode, p);
            return row;
        }));

    Table t;
    t.name    = "norm_bracket_sweep";
    t.headers = {sweep_axis, "axis", "lower", "upper", "growth_bound", "status"};

    std::vector<std::pair<double, double>> sweep;
    for (auto& job : jobs) {
        Row row;
        try {
            row = job.get();
        } catch (const error& e) {
            row.ok     = false;
            row.status = std::string("error: ") + e.what();
            r.pass     = false;
        }
        t.rows.push_back({std::to_string(row.value),
                          row.ok ? format_double(row.axis) : "",
                          row.ok ? format_double(row.lower) : "",
                          row.ok ? format_double(row.upper) : "",
                          row.ok ? format_double(row.growth) : "", row.status});
        if (row.ok)
            sweep.emplace_back(row.axis, row.upper);
    }
    r.tables.push_back(std::move(t));

    if (sweep.size() < 3) {
        r.notes.push_back("fit skipped: fewer than 3 resolved rows");
        r.pass = false;
        return r;
    }

    const heis::ExponentProfile profile = heis::exponent_profile(n);
    const std::string axis_name = sweep_axis == "k" ? "2k+n" : "m";
    if (p == 1.0 || p == 2.0) {
        const double u = 1.0 / p;
        const double predicted =
            sweep_axis == "k" ? profile.alpha(u) : profile.beta(u);
        const fit::ExponentReport report =
            fit::exponent_report(axis_name, sweep, predicted, tolerance);
        r.notes.push_back(slope_note(report));
        r.pass = r.pass && report.pass;
    } else {
        const fit::SlopeFit f = fit::loglog_fit(sweep);
        r.notes.push_back("slope=" + format_fixed(f.slope, 2) + "±"
                          + format_fixed(f.slope_stderr, 2)
                          + " (informational; no calibrated prediction at p="
                          + format_double(p) + ")");
    }
    return r;
}

RunResult run_heis_bounds(int n, double p, const std::string& range_spec,
                          long long band_start)
{
    const auto [lo, hi] = parse_int_range(range_spec, "--N");

    RunResult r;
    r.command = "heis bounds";

    const heis::HeisContext ctx{n};

    Table t;
    t.name    = "bound_curves";
    t.headers = {"N",          "dN",         "qn_bound", "cumulative_bound",
                 "mean_bound", "square_sum", "prime",    "prime_power"};
    for (long long value = lo; value <= hi; ++value) {
        const heis::DivisorSum d = heis::divisor_sum(ctx, value);
        const heis::AggregateBound cumulative = heis::aggregate_bound(
            ctx, heis::AggregateKind::cumulative, p, value);
        const heis::AggregateBound mean =
            heis::aggregate_bound(ctx, heis::AggregateKind::mean, p, value);
        t.rows.push_back(
            {std::to_string(value), to_fraction_string(d.value),
             format_double(heis::qn_norm_bound(ctx, value, p)),
             format_double(cumulative.bound), format_double(mean.bound),
             to_fraction_string(cumulative.square_sum),
             heis::is_prime(value) ? "yes" : "no",
             heis::is_prime_power(value) ? "yes" : "no"});
    }
    r.tables.push_back(std::move(t));

    if (band_start > 0) {
        const heis::AggregateBound band = heis::aggregate_bound(
            ctx, heis::AggregateKind::band, p, hi, band_start);
        Table bt;
        bt.name    = "band_aggregate";
        bt.headers = {"N1", "N2", "bound", "square_sum"};
        bt.rows    = {{std::to_string(band_start), std::to_string(hi),
                       format_double(band.bound),
                       to_fraction_string(band.square_sum)}};
        r.tables.push_back(std::move(bt));
    }

    r.notes.push_back(std::string("prime-case hypothesis for n=")
                      + std::to_string(n) + ": "
                      + (heis::prime_case_hypothesis(n) ? "holds" : "not asserted"));
    r.notes.push_back(std::string("fixed-prime-power hypothesis for n=")
                      + std::to_string(n) + ": "
                      + (heis::fixed_prime_case_hypothesis(n) ? "holds"
                                                              : "not asserted"));
    return r;
}

// ---------------------------------------------------------------------
// contract commands
// ---------------------------------------------------------------------

RunResult run_contract_lemma2(int n, double p, const std::string& nu_list,
                              long long m, double radius, int nodes)
{
    RunResult r;
    r.command = "contract lemma2";

    const std::vector<long long> schedule = parse_int_list(nu_list, "--nu");

    const heis::HeisContext   ctx{n};
    const heis::AxialFunction f = contraction::standard_test_function(m, radius);
    const double target = heis::axial_lp_norm(ctx, f, p, nodes);

    std::vector<std::future<double>> jobs;
    for (long long nu : schedule)
        jobs.push_back(std::async(std::launch::async, [&, nu] {
            return contraction::lemma2_ratio(ctx, f, nu, p, nodes);
        }));

    Table t;
    t.name    = "compensated_norms";
    t.headers = {"nu", "ratio", "target", "gap"};

    bool   below      = true;
    bool   increasing = true;
    double previous   = 0.0;
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        const double ratio = jobs[i].get();
        t.rows.push_back({std::to_string(schedule[i]), format_double(ratio),
                          format_double(target), format_double(target - ratio)});
        if (!(ratio < target))
            below = false;
        if (i > 0 && !(ratio > previous))
            increasing = false;
        previous = ratio;
    }
    r.tables.push_back(std::move(t));

    r.notes.push_back(std::string("ratio strictly below target: ")
                      + (below ? "yes" : "no"));
    if (schedule.size() > 1)
        r.notes.push_back(std::string("ratio increasing: ")
                          + (increasing ? "yes" : "no"));
    r.pass = below && increasing;
    return r;
}

RunResult run_contract_limit(int n, long long m, int k,
                             const std::string& nu_list, double radius,
                             int nodes)
{
    RunResult r;
    r.command = "contract limit";

    const std::vector<long long> schedule = parse_int_list(nu_list, "--nu");

    const heis::HeisContext   ctx{n};
    const heis::AxialFunction f = contraction::standard_test_function(m, radius);

    const std::vector<contraction::LimitRecord> records =
        contraction::proposition3_harness(ctx, f, m, k, schedule, nodes);

    Table t;
    t.name    = "limit_records";
    t.headers = {"nu", "sphere_value", "target", "rel_err"};
    bool decreasing = true;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& record = records[i];
        t.rows.push_back({std::to_string(record.nu),
                          format_double(record.sphere_value),
                          format_double(record.target),
                          format_double(record.rel_err)});
        if (i > 0 && !(record.rel_err < records[i - 1].rel_err))
            decreasing = false;
    }
    r.tables.push_back(std::move(t));

    const double final_err = records.back().rel_err;
    if (records.size() > 1)
        r.notes.push_back(std::string("rel_err decreasing: ")
                          + (decreasing ? "yes" : "no"));
    r.notes.push_back("final rel_err=" + format_double(final_err) + " (<= 0.05: "
                      + (final_err <= 0.05 ? "yes" : "no") + ")");
    r.pass = decreasing && final_err <= 0.05;
    return r;
}

} // namespace

// ---------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err)
{
    CLI::App app{"speclim: spectral-projector kernels on the sphere and the "
                 "reduced Heisenberg group, their norm-growth laws, and the "
                 "contraction limit connecting them"};
    app.require_subcommand(1);

    std::string format  = "csv";
    std::string output;
    std::string out_dir;
    int         nodes = 64;
    long long   seed  = 0;
    double      tolerance = 0.05;

    if (const char* env = std::getenv("SPECLIM_OUT_DIR"))
        out_dir = env;

    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--output", output,
                   "write the rendered document to this file instead of stdout");
    app.add_option("--out-dir", out_dir,
                   "directory for --output (default: $SPECLIM_OUT_DIR)");
    app.add_option("--nodes", nodes, "Gauss-Legendre nodes per quadrature panel")
        ->check(CLI::Range(32, 4096))
        ->capture_default_str();
    app.add_option("--seed", seed,
                   "reserved; every default computation is deterministic");
    app.add_option("--tolerance", tolerance,
                   "slope tolerance for sweep verdict lines")
        ->capture_default_str();
    app.set_config("--config", "",
                   "configuration file (flat key = value; sections per "
                   "subcommand; command-line flags win)");

    std::optional<RunResult> result;

    // ---- specfun ----
    CLI::App* specfun_cmd = app.add_subcommand(
        "specfun", "polynomial evaluation and the Jacobi-to-Laguerre limit");
    specfun_cmd->require_subcommand(1);

    {
        auto* eval = specfun_cmd->add_subcommand("eval", "evaluate one polynomial");
        auto  jacobi_spec   = std::make_shared<std::string>();
        auto  laguerre_spec = std::make_shared<std::string>();
        auto  x             = std::make_shared<double>(0.0);
        eval->add_option("--jacobi", *jacobi_spec, "degree,alpha,beta");
        eval->add_option("--laguerre", *laguerre_spec, "degree,alpha");
        eval->add_option("--x", *x, "evaluation point")->required();
        eval->callback([&result, jacobi_spec, laguerre_spec, x] {
            result = run_specfun_eval(*jacobi_spec, *laguerre_spec, *x);
        });
    }
    {
        auto* sweep = specfun_cmd->add_subcommand(
            "mehler-sweep",
            "error table of the large-parameter limit along an N schedule");
        auto k = std::make_shared<int>(0);
        auto j = std::make_shared<int>(0);
        auto x = std::make_shared<double>(0.0);
        auto N = std::make_shared<std::string>();
        sweep->add_option("--k", *k, "Laguerre degree")->required();
        sweep->add_option("--j", *j, "first index (j >= k)")->required();
        sweep->add_option("--x", *x, "evaluation point")->required();
        sweep->add_option("--N", *N, "comma-separated N schedule")->required();
        sweep->callback([&result, k, j, x, N] {
            result = run_specfun_mehler(*k, *j, *x, *N);
        });
    }

    // ---- sphere ----
    CLI::App* sphere_cmd = app.add_subcommand(
        "sphere", "bidegree dimensions, zonal kernels, and norm sweeps");
    sphere_cmd->require_subcommand(1);

    {
        auto* dims = sphere_cmd->add_subcommand(
            "dims", "dimension and eigenvalue table of the bidegree grid");
        auto n    = std::make_shared<int>(1);
        auto lmax = std::make_shared<long long>(3);
        dims->add_option("--n", *n, "complex dimension parameter")->required();
        dims->add_option("--lmax", *lmax, "largest bidegree component")
            ->capture_default_str();
        dims->callback(
            [&result, n, lmax] { result = run_sphere_dims(*n, *lmax); });
    }
    {
        auto* zonal = sphere_cmd->add_subcommand("zonal", "evaluate one zonal kernel");
        auto n     = std::make_shared<int>(1);
        auto bd    = std::make_shared<std::string>();
        auto theta = std::make_shared<double>(0.0);
        auto phi   = std::make_shared<double>(0.0);
        zonal->add_option("--n", *n, "complex dimension parameter")->required();
        zonal->add_option("--bd", *bd, "bidegree l,lprime")->required();
        zonal->add_option("--theta", *theta, "polar coordinate in [0, pi/2]")
            ->required();
        zonal->add_option("--phi", *phi, "angular coordinate")->required();
        zonal->callback([&result, n, bd, theta, phi] {
            result = run_sphere_zonal(*n, *bd, *theta, *phi);
        });
    }
    {
        auto* sweep = sphere_cmd->add_subcommand(
            "norm-sweep",
            "projector norm brackets along a dyadic bidegree ray, with slope fit");
        auto n      = std::make_shared<int>(1);
        auto ray    = std::make_shared<std::string>("diagonal");
        auto p      = std::make_shared<double>(1.0);
        auto lrange = std::make_shared<std::string>();
        sweep->add_option("--n", *n, "complex dimension parameter")->required();
        sweep->add_option("--ray", *ray, "diagonal (l,l) or holomorphic (0,l)")
            ->capture_default_str();
        sweep->add_option("--p", *p, "source exponent in [1, 2]")
            ->capture_default_str();
        sweep->add_option("--lrange", *lrange, "dyadic range a:b")->required();
        sweep->callback([&result, &nodes, &tolerance, n, ray, p, lrange] {
            result = run_sphere_norm_sweep(*n, *ray, *p, *lrange, nodes, tolerance);
        });
    }

    // ---- heis ----
    CLI::App* heis_cmd = app.add_subcommand(
        "heis", "group-side kernels, exponent laws, divisor sums, and bounds");
    heis_cmd->require_subcommand(1);

    {
        auto* exponents = heis_cmd->add_subcommand(
            "exponents", "exact rational exponent profile and breakpoint");
        auto n = std::make_shared<int>(1);
        exponents->add_option("--n", *n, "group dimension parameter")->required();
        exponents->callback([&result, n] { result = run_heis_exponents(*n); });
    }
    {
        auto* dn = heis_cmd->add_subcommand("dN", "exact divisor-sum values");
        auto n = std::make_shared<int>(1);
        auto N = std::make_shared<std::string>();
        dn->add_option("--n", *n, "group dimension parameter")->required();
        dn->add_option("--N", *N, "eigenvalue (single value or range a:b)")
            ->required();
        dn->callback([&result, n, N] { result = run_heis_dN(*n, *N); });
    }
    {
        auto* check = heis_cmd->add_subcommand(
            "qn-check", "exact aggregation identity over an eigenvalue range");
        auto n = std::make_shared<int>(1);
        auto N = std::make_shared<std::string>();
        check->add_option("--n", *n, "group dimension parameter")->required();
        check->add_option("--N", *N, "eigenvalue range a:b")->required();
        check->callback([&result, n, N] { result = run_heis_qn_check(*n, *N); });
    }
    {
        auto* sweep = heis_cmd->add_subcommand(
            "norm-sweep", "projector norm brackets along a dyadic k or m sweep");
        auto n     = std::make_shared<int>(1);
        auto axis  = std::make_shared<std::string>("k");
        auto p     = std::make_shared<double>(1.0);
        auto range = std::make_shared<std::string>();
        auto m     = std::make_shared<long long>(1);
        auto k     = std::make_shared<int>(0);
        sweep->add_option("--n", *n, "group dimension parameter")->required();
        sweep->add_option("--sweep", *axis, "swept index: k or m")
            ->capture_default_str();
        sweep->add_option("--p", *p, "source exponent in [1, 2]")
            ->capture_default_str();
        sweep->add_option("--range", *range, "dyadic range a:b")->required();
        sweep->add_option("--m", *m, "fixed central frequency for the k sweep")
            ->capture_default_str();
        sweep->add_option("--k", *k, "fixed Laguerre index for the m sweep")
            ->capture_default_str();
        sweep->callback([&result, &tolerance, n, axis, p, range, m, k] {
            result = run_heis_norm_sweep(*n, *axis, *p, *range, *m, *k, tolerance);
        });
    }
    {
        auto* bounds = heis_cmd->add_subcommand(
            "bounds", "eigenvalue-projector and aggregation bound curves");
        auto n          = std::make_shared<int>(1);
        auto p          = std::make_shared<double>(1.0);
        auto N          = std::make_shared<std::string>();
        auto band_start = std::make_shared<long long>(0);
        bounds->add_option("--n", *n, "group dimension parameter")->required();
        bounds->add_option("--p", *p, "source exponent in [1, 2]")
            ->capture_default_str();
        bounds->add_option("--N", *N, "eigenvalue range a:b")->required();
        bounds->add_option("--band-start", *band_start,
                           "add a band aggregate over (band-start, b]");
        bounds->callback([&result, n, p, N, band_start] {
            result = run_heis_bounds(*n, *p, *N, *band_start);
        });
    }

    // ---- contract ----
    CLI::App* contract_cmd = app.add_subcommand(
        "contract",
        "norm- and projector-limit harnesses for the group-to-sphere "
        "rescaling; the default test function is the radial bump "
        "(1-(r/R)^2)^3 on r <= R (R = 2.5) times e^(i m t)");
    contract_cmd->require_subcommand(1);

    {
        auto* lemma2 = contract_cmd->add_subcommand(
            "lemma2", "compensated-norm ratios along a nu schedule");
        auto n      = std::make_shared<int>(1);
        auto p      = std::make_shared<double>(2.0);
        auto nu     = std::make_shared<std::string>();
        auto m      = std::make_shared<long long>(1);
        auto radius = std::make_shared<double>(2.5);
        lemma2->add_option("--n", *n, "group dimension parameter")->required();
        lemma2->add_option("--p", *p, "norm exponent, >= 1")->capture_default_str();
        lemma2->add_option("--nu", *nu, "comma-separated nu schedule")->required();
        lemma2->add_option("--m", *m, "central frequency of the test function")
            ->capture_default_str();
        lemma2->add_option("--radius", *radius, "support radius of the test function")
            ->capture_default_str();
        lemma2->callback([&result, &nodes, n, p, nu, m, radius] {
            result = run_contract_lemma2(*n, *p, *nu, *m, *radius, nodes);
        });
    }
    {
        auto* limit = contract_cmd->add_subcommand(
            "limit", "projector-coefficient convergence along a nu schedule");
        auto n      = std::make_shared<int>(1);
        auto m      = std::make_shared<long long>(1);
        auto k      = std::make_shared<int>(0);
        auto nu     = std::make_shared<std::string>();
        auto radius = std::make_shared<double>(2.5);
        limit->add_option("--n", *n, "group dimension parameter")->required();
        limit->add_option("--m", *m, "central frequency (sign selects the "
                                     "mirrored bidegree)")
            ->capture_default_str();
        limit->add_option("--k", *k, "Laguerre index")->capture_default_str();
        limit->add_option("--nu", *nu, "comma-separated nu schedule")->required();
        limit->add_option("--radius", *radius, "support radius of the test function")
            ->capture_default_str();
        limit->callback([&result, &nodes, n, m, k, nu, radius] {
            result = run_contract_limit(*n, *m, *k, *nu, *radius, nodes);
        });
    }

    // ---- parse and emit ----
    // Global options (--format, --nodes, ...) may appear after a
    // subcommand name; let unmatched flags climb back to the root.
    const auto all = [](const CLI::App*) { return true; };
    for (CLI::App* group : app.get_subcommands(all)) {
        group->fallthrough();
        for (CLI::App* leaf : group->get_subcommands(all))
            leaf->fallthrough();
    }

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("speclim");
    for (const std::string& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    if (!result) {
        err << "error: no command executed\n";
        return 1;
    }

    std::ostringstream rendered;
    if (format == "json")
        render_json(*result, rendered);
    else
        render_csv(*result, rendered);

    if (!output.empty()) {
        std::filesystem::path path = output;
        if (path.is_relative() && !out_dir.empty())
            path = std::filesystem::path(out_dir) / path;
        std::ofstream file(path, std::ios::binary);
        if (!file) {
            err << "error: cannot open output file " << path.string() << '\n';
            return 1;
        }
        file << rendered.str();
        err << "wrote " << path.string() << '\n';
    } else {
        out << rendered.str();
    }

    return result->pass ? 0 : 1;
}

} // namespace speclim::cli
