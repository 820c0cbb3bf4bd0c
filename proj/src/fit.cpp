//
// Project     : speclim
// File        : fit.cpp
// Description : least-squares power-law fitting
//
// SPDX-License-Identifier: BSD-3-Clause
//

#include <speclim/fit.hpp>

#include <Eigen/Dense>

#include <cmath>

namespace speclim::fit {

SlopeFit loglog_fit(const std::vector<std::pair<double, double>>& xy)
{
    const Eigen::Index count = static_cast<Eigen::Index>(xy.size());
    if (count < 3)
        throw domain_error("loglog_fit: need at least three points");

    for (std::size_t i = 0; i < xy.size(); ++i) {
        if (!(xy[i].first > 0.0) || !(xy[i].second > 0.0))
            throw domain_error("loglog_fit: data must be strictly positive");
        if (i > 0 && !(xy[i].first > xy[i - 1].first))
            throw domain_error("loglog_fit: abscissae must be strictly increasing");
    }

    Eigen::MatrixXd design(count, 2);
    Eigen::VectorXd ordinate(count);
    SlopeFit        result;
    result.points.reserve(xy.size());
    for (Eigen::Index i = 0; i < count; ++i) {
        const double lx = std::log(xy[i].first);
        const double ly = std::log(xy[i].second);
        design(i, 0) = lx;
        design(i, 1) = 1.0;
        ordinate[i]  = ly;
        result.points.emplace_back(lx, ly);
    }

    const Eigen::Vector2d coeff =
        design.colPivHouseholderQr().solve(ordinate);
    result.slope     = coeff[0];
    result.intercept = coeff[1];

    const Eigen::VectorXd residual     = ordinate - design * coeff;
    const double          ss_residual  = residual.squaredNorm();
    const double          mean         = ordinate.mean();
    const double          ss_total     = (ordinate.array() - mean).square().sum();
    const double          lx_mean      = design.col(0).mean();
    const double          lx_spread_sq = (design.col(0).array() - lx_mean).square().sum();

    // A constant ordinate is fit exactly by a horizontal line; report a
    // perfect fit rather than dividing by a vanishing total variance.
    result.r_squared = ss_total > 0.0 ? 1.0 - ss_residual / ss_total : 1.0;
    result.slope_stderr =
        std::sqrt(std::max(0.0, ss_residual / static_cast<double>(count - 2))
                  / lx_spread_sq);
    return result;
}

ExponentReport exponent_report(std::string                                   axis,
                               const std::vector<std::pair<double, double>>& xy,
                               double                                        predicted,
                               double                                        tolerance)
{
    if (!xy.empty()) {
        // The swept parameter must cover at least a factor of eight.  The
        // abscissa is often an affinely shifted form of that parameter
        // (e.g. 2l+n for a sweep in l), which compresses the measured
        // span slightly, so the check carries 15% slack.
        const double span = xy.back().first / xy.front().first;
        if (!(span >= 8.0 * 0.85))
            throw insufficient_range_error(
                "exponent_report: sweep must span at least a factor of 8 in "
                + axis);
    }

    ExponentReport report;
    report.axis      = std::move(axis);
    report.fit       = loglog_fit(xy);
    report.predicted = predicted;
    report.tolerance = tolerance;
    report.pass      = std::fabs(report.fit.slope - predicted) <= tolerance;
    return report;
}

} // namespace speclim::fit
