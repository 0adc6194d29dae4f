#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mqt::cli {

/// Runs the command-line driver on the given arguments (program name
/// excluded). Output is deterministic: identical arguments produce identical
/// bytes. Exit codes: 0 success / theorem confirmed, 1 usage or input error,
/// 2 enumeration budget exceeded, 3 theorem falsified or internal invariant
/// violation (never expected).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mqt::cli
