#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dsum::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Accepts "100000", "1e5" and "10^5".
std::uint64_t parse_count(const std::string& text);

}  // namespace dsum::cli
