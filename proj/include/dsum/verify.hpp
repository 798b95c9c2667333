#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dsum {

struct VerifyReport {
    std::string suite;
    std::uint64_t run = 0;
    std::uint64_t passed = 0;
    std::string first_failure;  // inputs, expected and obtained value of the first failed case

    bool ok() const { return passed == run; }
};

struct VerifyOptions {
    std::uint64_t max_modulus = 0;  // 0 selects the suite default
    std::uint64_t seed = 1;
};

const std::vector<std::string>& verify_suite_names();

/// Runs one named battery ("all" runs every suite and merges the counts).
/// Throws std::invalid_argument for an unknown name.
VerifyReport run_verify(const std::string& suite, const VerifyOptions& options = {});

}  // namespace dsum
