#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gia {

/// Full command-line surface; returns the process exit code.
///   0  success / member / holds
///   1  non-member / law fails / counterexample found
///   2  usage or parse error
///   3  node budget exhausted
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gia
