#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace dsum {

struct PrimePower {
    std::uint64_t p;
    unsigned e;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Sorted by prime; empty for n = 1.
using Factorization = std::vector<PrimePower>;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse of a mod m; throws std::invalid_argument if gcd(a, m) > 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Trial division to 10^6 followed by Pollard rho with fixed seeds.
Factorization factorize(std::int64_t n);

std::uint64_t reconstruct(const Factorization& f);
std::vector<std::uint64_t> divisors(const Factorization& f);
std::vector<std::uint64_t> divisors(std::int64_t n);
std::vector<std::uint64_t> distinct_primes(std::int64_t n);

int mobius(std::int64_t n);
std::uint64_t totient(std::int64_t n);

/// Smallest positive primitive root modulo an odd prime power (or 2, 4).
std::uint64_t smallest_primitive_root(std::uint64_t modulus);

/// Floor of sqrt(n).
std::uint64_t isqrt(std::uint64_t n);

}  // namespace dsum
