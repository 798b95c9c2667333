#pragma once

#include <cstdint>

#include "dsum/rational.hpp"

namespace dsum {

/// s(c, d) by the sawtooth sum over a = 1..d-1. O(d); the reference oracle.
ExactRational dedekind_sum_naive(std::int64_t c, std::int64_t d);

/// s(c, d) by the reciprocity law, O(log d) steps.
ExactRational dedekind_sum(std::int64_t c, std::int64_t d);

/// The integer 12·d·s(c, d). Uses 128-bit arithmetic for d < 2^41 and
/// arbitrary precision above; both paths agree bit for bit.
BigInt dedekind_scaled(std::int64_t c, std::int64_t d);

/// 128-bit path of dedekind_scaled; requires 0 <= c < d < 2^41, gcd(c, d) = 1.
__int128 dedekind_scaled_i128(std::uint64_t c, std::uint64_t d);

/// Arbitrary-precision path of dedekind_scaled, any size.
BigInt dedekind_scaled_big(std::uint64_t c, std::uint64_t d);

/// s(1, d) = (d-1)(d-2)/(12d).
ExactRational s_one(std::int64_t d);

/// Restricted sum over indices coprime to f, via sum_{delta | f} mu(delta)/delta · s(c, f/delta).
ExactRational dedekind_sum_tilde(std::int64_t c, std::int64_t f);

/// phi(f)/12 · (prod_{p | f}(1 + 1/p) - 3/f).
ExactRational tilde_s_one(std::int64_t f);

/// Common value f'^2/(12f) - 1/4 + 1/(6f) of s(1 + k f', f) for gcd(k, f) = 1,
/// valid when f' | f and f | f'^2.
ExactRational s_near_one_closed(std::int64_t f, std::int64_t f_prime);

}  // namespace dsum
