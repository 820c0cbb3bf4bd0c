//
// Project     : speclim
// File        : cli.hpp
// Description : Command-line front end: sweeps, identity checks, limit
//               harnesses, CSV/JSON emission
//
// SPDX-License-Identifier: BSD-3-Clause
//

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace speclim::cli {

/// Parses and executes one command line (without the program name) and
/// writes the rendered document to `out` and diagnostics to `err`.
///
/// Commands are grouped as specfun (eval | mehler-sweep), sphere
/// (dims | zonal | norm-sweep), heis (exponents | dN | qn-check |
/// norm-sweep | bounds), and contract (lemma2 | limit).  Global options
/// select the output format (--format csv|json), an output file
/// (--output, resolved against --out-dir or $SPECLIM_OUT_DIR), a config
/// file (--config, flat key = value text; command-line flags win), and
/// the quadrature node count (--nodes, at least 32).
///
/// Every command is deterministic: identical configuration yields
/// byte-identical output.  The return value is the process exit status:
/// 0 when every verdict passed and no error occurred, nonzero otherwise.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace speclim::cli
