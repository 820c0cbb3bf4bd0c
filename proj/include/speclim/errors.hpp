//
// Project     : speclim
// File        : errors.hpp
// Description : exception taxonomy shared by all modules
//
// SPDX-License-Identifier: BSD-3-Clause
//

#pragma once

#include <stdexcept>
#include <string>

namespace speclim {

/// Base class of every error thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violates a documented precondition (range, sign, ordering).
class domain_error : public error {
public:
    using error::error;
};

/// A recurrence or accumulation left the representable range, so the
/// requested accuracy cannot be certified.
class precision_error : public error {
public:
    using error::error;
};

/// A quadrature grid failed its refinement-doubling consistency check:
/// the result would depend on resolution.
class resolution_error : public error {
public:
    using error::error;
};

/// An envelope was requested at a point where its formula is singular
/// (e.g. the oscillatory branch exactly at the interval endpoints).
class singular_envelope_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// A scaled function's support does not fit inside the polar coordinate
/// chart of the sphere; carries the smallest admissible scale.
class chart_overflow_error : public domain_error {
public:
    chart_overflow_error(const std::string& what, long long minimal_nu_)
        : domain_error(what)
        , minimal_nu(minimal_nu_)
    {}

    long long minimal_nu; ///< smallest scale parameter that would fit
};

/// A sweep does not span a wide enough parameter range for a slope fit
/// to be meaningful.
class insufficient_range_error : public domain_error {
public:
    using domain_error::domain_error;
};

} // namespace speclim
