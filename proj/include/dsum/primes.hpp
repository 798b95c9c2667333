#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace dsum {

/// Primes p with lower <= p <= upper and p = residue (mod modulus), ascending.
///
/// Segmented sieve of Eratosthenes; memory is proportional to the segment
/// length plus the base primes up to sqrt(upper), so windows near 10^13 are
/// cheap to walk.
class PrimeStream {
public:
    PrimeStream(std::uint64_t lower, std::uint64_t upper, std::uint64_t modulus, std::uint64_t residue,
                std::uint64_t segment_length = 1u << 18);

    std::optional<std::uint64_t> next();

    std::uint64_t lower() const { return lower_; }
    std::uint64_t upper() const { return upper_; }
    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t residue() const { return residue_; }

private:
    void fill_segment();

    std::uint64_t lower_, upper_, modulus_, residue_, segment_length_;
    std::vector<std::uint32_t> base_primes_;
    std::uint64_t seg_lo_;  // first integer not yet sieved
    std::vector<std::uint64_t> pending_;
    std::size_t pending_pos_ = 0;
    bool exhausted_ = false;
};

/// Validates arguments (0 <= r < q, gcd(r, q) = 1 unless q = 1) and returns the
/// stream over [A, A + span].
PrimeStream primes_in_progression(std::uint64_t A, std::uint64_t span, std::uint64_t q, std::uint64_t r);

/// Collects a whole stream; convenience for tests and small ranges.
std::vector<std::uint64_t> collect(PrimeStream stream);

/// Plain sieve of all primes <= n.
std::vector<std::uint32_t> simple_sieve(std::uint32_t n);

}  // namespace dsum
