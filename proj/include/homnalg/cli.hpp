#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homnalg {

/// Command dispatch; returns the process exit code.
/// 0 = success, 1 = a checked property failed, 2 = parse/usage error,
/// 3 = resource cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homnalg
