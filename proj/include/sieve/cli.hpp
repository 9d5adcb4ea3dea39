#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sieve {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when a verification or identity check fails, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sieve
