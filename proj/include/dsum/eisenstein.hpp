#pragma once

#include <cstdint>
#include <vector>

#include "dsum/rational.hpp"
#include "dsum/unit_group.hpp"

namespace dsum {

/// a + b·zeta_6, with norm a^2 + ab + b^2.
struct EisensteinInteger {
    std::int64_t a;
    std::int64_t b;

    std::int64_t norm() const { return a * a + a * b + b * b; }
    friend bool operator==(const EisensteinInteger&, const EisensteinInteger&) = default;
};

/// r = a·b^{-1} mod f for a coprime representation f = a^2 + ab + b^2.
struct RatioClass {
    std::uint64_t modulus;
    std::uint64_t ratio;
    EisensteinInteger witness;
};

/// Coprime representations of f, one per unit orbit (the associate with
/// a > 0, b > 0), sorted by b then a. There are 2^t of them, forming
/// 2^{t-1} conjugate pairs {(a, b), (b, a)}.
std::vector<EisensteinInteger> representations(std::uint64_t f);

/// E_f, sorted by ratio.
std::vector<RatioClass> e_f(std::uint64_t f);

/// The 2^{t-1} subgroups {1, a/b, b/a}, sorted by their smallest nontrivial element.
std::vector<Subgroup> order3_subgroups_from_ef(std::uint64_t f);

/// (a', b') of norm delta, gcd(a', b') = 1, with a b' = a' b (mod delta).
EisensteinInteger divisor_descend(std::int64_t a, std::int64_t b, std::uint64_t delta);

/// Checks s(r mod delta, delta) = (delta - 1)/(12 delta) and tilde s(r, f) = phi(f)/(12 f),
/// returning the former. A failed check throws std::logic_error.
ExactRational dedekind_at_ratio(std::uint64_t f, std::uint64_t delta, const RatioClass& r);

/// True when f > 3 and every prime factor of f is 1 mod 3.
bool admits_eisenstein_ratios(std::uint64_t f);

}  // namespace dsum
