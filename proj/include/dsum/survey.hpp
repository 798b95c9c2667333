#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "dsum/rational.hpp"

namespace dsum {

struct SurveyRecord {
    std::uint64_t p;
    std::uint64_t n;
    BigInt two_S;  // 2 S(H_n, p)
    BigInt N;      // 6 · two_S - p
    bool nonpositive;
};

/// Exact record for the order-n subgroup of (Z/pZ)^*; n > 1 odd, n | p - 1.
/// Throws std::logic_error if the parity constraints fail.
SurveyRecord survey_record(std::uint64_t p, std::uint64_t n);

/// An element of exact order n mod p: x^((p-1)/n) for the smallest x that works.
std::uint64_t element_of_order(std::uint64_t n, std::uint64_t p);

enum class ScanMode { fixed, window, all_odd };

std::string to_string(ScanMode mode);
ScanMode parse_scan_mode(const std::string& text);

/// fixed: primes p = 1 (mod 2n), p <= span_or_B.
/// window: primes p = 1 (mod 2n), A <= p <= A + span_or_B.
/// all_odd: pairs (p, n), p odd prime <= span_or_B, n odd dividing p - 1 (n is ignored).
struct ScanRange {
    ScanMode mode;
    std::uint64_t n;
    std::uint64_t A;
    std::uint64_t span_or_B;

    std::uint64_t lower() const { return mode == ScanMode::window ? A : 0; }
    std::uint64_t upper() const { return mode == ScanMode::window ? A + span_or_B : span_or_B; }
    friend bool operator==(const ScanRange&, const ScanRange&) = default;
};

struct DensityReport {
    ScanRange range;
    std::uint64_t c_prime = 0;
    std::uint64_t c_leq0 = 0;
    std::uint64_t last_p = 0;      // largest processed prime (0 if none)
    std::uint64_t covered_to = 0;  // every integer <= covered_to in range is done
    bool complete = false;

    /// c_leq0 / c_prime truncated to `places` decimals ("n/a" when c_prime = 0).
    std::string rho(int places = 5) const;
};

struct ScanOptions {
    unsigned threads = 1;
    std::uint64_t chunk = std::uint64_t{1} << 20;
    /// Written atomically after every batch of chunks when non-empty.
    std::string checkpoint_path;
    /// Receives records in ascending p order.
    std::function<void(const SurveyRecord&)> on_record;
    /// Stop (leaving an incomplete report) once this integer has been covered.
    std::optional<std::uint64_t> stop_after;
};

DensityReport scan(const ScanRange& range, const ScanOptions& options = {});
DensityReport scan_fixed_n(std::uint64_t n, std::uint64_t B, const ScanOptions& options = {});
DensityReport scan_window(std::uint64_t n, std::uint64_t A, std::uint64_t span, const ScanOptions& options = {});
DensityReport scan_all_odd_subgroups(std::uint64_t B, const ScanOptions& options = {});

/// Continues the scan stored at options.checkpoint_path. Throws
/// std::invalid_argument when the checkpoint was written for a different range.
DensityReport resume(const ScanRange& range, const ScanOptions& options);

std::string checkpoint_json(const DensityReport& report);
DensityReport parse_checkpoint(const std::string& json_text);

/// {"n","range","c_prime","c_leq0","rho"}.
std::string report_json(const DensityReport& report);

std::string csv_header();  // "p,n,two_S,N,nonpositive"
std::string csv_row(const SurveyRecord& record);

}  // namespace dsum
