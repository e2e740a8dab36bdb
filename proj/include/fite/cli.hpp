#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fite {

/// Runs the full command-line interface against the given streams.
/// Exit codes: 0 success, 2 input error, 3 unreachable plan target,
/// 4 resource limit.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fite
