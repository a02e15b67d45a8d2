#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hypersym::cli {

/// Runs the command-line surface (subcommands: check, symmetrize,
/// grothendieck, refine, enumerate) against the given streams.
/// Exit codes: 0 success, 1 property or certificate failure, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypersym::cli
