//
// Project     : speclim
// File        : fit.hpp
// Description : log-log slope estimation and exponent-comparison reports;
//               the measurement instrument for every growth law
//
// SPDX-License-Identifier: BSD-3-Clause
//

#pragma once

#include <speclim/errors.hpp>

#include <string>
#include <utility>
#include <vector>

namespace speclim::fit {

/// Ordinary least-squares line through (log x, log y) points.
struct SlopeFit {
    double slope        = 0.0;
    double intercept    = 0.0;
    double r_squared    = 0.0; ///< 1 for an exact power law
    double slope_stderr = 0.0;

    std::vector<std::pair<double, double>> points; ///< (log x, log y)
};

/// Fit a power law y = C x^s by unweighted least squares in log-log
/// coordinates.  Requires >= 3 points with strictly increasing positive
/// x and positive y; throws domain_error otherwise.
SlopeFit loglog_fit(const std::vector<std::pair<double, double>>& xy);

/// A measured growth exponent compared against a predicted one.
struct ExponentReport {
    std::string axis; ///< name of the swept parameter, e.g. "2k+n" or "m"
    SlopeFit    fit;
    double      predicted = 0.0;
    double      tolerance = 0.0;
    bool        pass      = false; ///< |slope - predicted| <= tolerance
};

/// Fit the sweep and compare.  The sweep must span at least a factor of
/// eight in the parameter; throws insufficient_range_error otherwise.
ExponentReport exponent_report(std::string                                   axis,
                               const std::vector<std::pair<double, double>>& xy,
                               double                                        predicted,
                               double                                        tolerance);

} // namespace speclim::fit
