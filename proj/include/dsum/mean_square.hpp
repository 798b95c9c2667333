#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "dsum/rational.hpp"
#include "dsum/unit_group.hpp"

namespace dsum {

/// The real number coefficient · pi^2, carried exactly.
struct PiSquared {
    ExactRational coefficient;

    double approx() const;
    /// Decimal rendering with `significant` significant digits (>= 30 is exact to the digit).
    std::string decimal(int significant = 30) const;

    friend bool operator==(const PiSquared&, const PiSquared&) = default;
};

/// S(H, f) = sum over h in H of s(h, f).
ExactRational subgroup_sum_S(const Subgroup& h);

/// The restricted analogue: sum over h in H of the coprime-index Dedekind sum.
ExactRational subgroup_sum_tilde(const Subgroup& h);

struct SubgroupSumReport {
    ExactRational S;
    ExactRational tilde_S;
    std::optional<BigInt> two_S_integer;  // 2S when it is an integer
    std::optional<ExactRational> N;       // 12S - f when f is prime
};

SubgroupSumReport subgroup_sum_report(const Subgroup& h);

/// Mean of |L(1, chi)|^2 over odd chi mod f trivial on H, as (2/f)·tilde S(H, f) · pi^2.
PiSquared mean_square_exact(std::uint64_t f, const Subgroup& h);

/// N(H, p) = 12 S(H, p) - p. For |H| > 1 the result must be an odd integer;
/// a violation throws std::logic_error (it can only come from an engine bug).
ExactRational n_value(std::uint64_t p, const Subgroup& h);

/// (1/6)(phi(f)/f)(prod_{p | f}(1 + 1/p) - 3/f) · pi^2.
PiSquared mean_square_closed_trivial(std::uint64_t f);

/// (1/6)(phi(f)/f)(prod_{p | f}(1 + 1/p) - 1/f) · pi^2; every prime factor of f must be 1 mod 3.
PiSquared mean_square_closed_h3(std::uint64_t f);

/// Closed form of S over the kernel subgroup {1 + k f'} of (Z/fZ)^*, f = p^n f'.
ExactRational kernel_sum_closed(std::uint64_t p, unsigned n, std::uint64_t f_prime);

/// Mean of s(h, p^m) over the elements h of exact order p^n, 1 <= n <= m - 1.
ExactRational mean_order_closed(std::uint64_t p, unsigned m, unsigned n);

/// L(1, chi) = (pi / 2f) sum_{a=1}^{f-1} chi(a) cot(pi a / f) for odd chi.
std::complex<double> l_one_numeric(const DirichletCharacter& chi);

/// Floating-point mean of |L(1, chi)|^2 over X_f^-(H). Per-character work may be
/// spread over `threads` workers; the final sum runs in character order.
double mean_square_numeric(std::uint64_t f, const Subgroup& h, unsigned threads = 1);

/// prod over primes q | f and chi in X_f^-(H) of (1 - chi*(q)/q). Throws if the
/// imaginary part exceeds 1e-9.
double euler_correction_pi(std::uint64_t f, const Subgroup& h);

}  // namespace dsum
