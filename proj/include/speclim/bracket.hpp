//
// Project     : speclim
// File        : bracket.hpp
// Description : certified two-sided estimate of an operator norm
//
// SPDX-License-Identifier: BSD-3-Clause
//

#pragma once

namespace speclim {

/// Certified lower/upper bounds for an L^p -> L^2 projector norm.
/// lower comes from a concrete test function, upper from a convolution
/// inequality; lower <= upper always, and at p = 1 and p = 2 the two
/// sides coincide (the norm is known exactly there).
struct NormBracket {
    double p     = 2.0;
    double lower = 0.0;
    double upper = 0.0;
};

} // namespace speclim
