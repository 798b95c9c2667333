#include "dsum/eisenstein.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dsum/arith.hpp"
#include "dsum/dedekind.hpp"

namespace dsum {

bool admits_eisenstein_ratios(std::uint64_t f) {
    if (f <= 3) return false;
    const auto ps = distinct_primes(static_cast<std::int64_t>(f));
    return std::all_of(ps.begin(), ps.end(), [](std::uint64_t p) { return p % 3 == 1; });
}

namespace {

// Positive coprime solutions of a^2 + ab + b^2 = n (n = 1 gives (1, 0)).
std::vector<EisensteinInteger> positive_representations(std::uint64_t n) {
    std::vector<EisensteinInteger> out;
    if (n == 1) return {{1, 0}};
    for (std::uint64_t b = 1; 3 * b * b <= 4 * n; ++b) {
        // a = (-b + sqrt(4n - 3b^2)) / 2
        const std::uint64_t disc = 4 * n - 3 * b * b;
        const std::uint64_t r = isqrt(disc);
        if (r * r != disc || r <= b || (r - b) % 2 != 0) continue;
        const std::uint64_t a = (r - b) / 2;
        if (a >= 1 && std::gcd(a, b) == 1)
            out.push_back({static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
    }
    return out;
}

std::uint64_t ratio_mod(const EisensteinInteger& e, std::uint64_t m) {
    auto red = [m](std::int64_t x) {
        std::int64_t r = x % static_cast<std::int64_t>(m);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
    };
    return mulmod(red(e.a), invmod(red(e.b), m), m);
}

void require_admissible(std::uint64_t f) {
    if (!admits_eisenstein_ratios(f))
        throw std::invalid_argument("f must exceed 3 and have every prime factor = 1 mod 3");
}

}  // namespace

std::vector<EisensteinInteger> representations(std::uint64_t f) {
    require_admissible(f);
    return positive_representations(f);
}

std::vector<RatioClass> e_f(std::uint64_t f) {
    std::vector<RatioClass> out;
    for (const auto& e : representations(f)) {
        const std::uint64_t r = ratio_mod(e, f);
        // Associates give the same ratio; keep one witness per residue.
        if (std::none_of(out.begin(), out.end(), [r](const RatioClass& c) { return c.ratio == r; }))
            out.push_back({f, r, e});
    }
    std::sort(out.begin(), out.end(), [](const RatioClass& x, const RatioClass& y) { return x.ratio < y.ratio; });
    return out;
}

std::vector<Subgroup> order3_subgroups_from_ef(std::uint64_t f) {
    std::vector<Subgroup> out;
    for (const auto& c : e_f(f)) {
        Subgroup h = Subgroup::generated_by(f, {c.ratio});
        if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) { return x.elements()[1] < y.elements()[1]; });
    return out;
}

EisensteinInteger divisor_descend(std::int64_t a, std::int64_t b, std::uint64_t delta) {
    const EisensteinInteger alpha{a, b};
    const std::int64_t f = alpha.norm();
    if (std::gcd(a, b) != 1) throw std::invalid_argument("divisor_descend: gcd(a, b) must be 1");
    if (delta == 0 || f % static_cast<std::int64_t>(delta) != 0)
        throw std::invalid_argument("divisor_descend: delta must divide a^2 + ab + b^2");
    const auto d = static_cast<__int128>(delta);
    for (const auto& e : positive_representations(delta)) {
        const __int128 diff = static_cast<__int128>(a) * e.b - static_cast<__int128>(e.a) * b;
        if (diff % d == 0) return e;
    }
    throw std::logic_error("divisor_descend: no matching representation");
}

ExactRational dedekind_at_ratio(std::uint64_t f, std::uint64_t delta, const RatioClass& r) {
    if (delta == 0 || f % delta != 0) throw std::invalid_argument("dedekind_at_ratio: delta must divide f");
    if (r.modulus != f) throw std::invalid_argument("dedekind_at_ratio: ratio class modulus mismatch");
    const auto di = static_cast<std::int64_t>(delta);
    const ExactRational s = dedekind_sum(static_cast<std::int64_t>(r.ratio % delta), di);
    const ExactRational expected(BigInt(di - 1), BigInt(12) * di);
    if (s != expected)
        throw std::logic_error("dedekind_at_ratio: s(h3, delta) = " + s.str() + ", expected " + expected.str());
    const auto fi = static_cast<std::int64_t>(f);
    const ExactRational tilde = dedekind_sum_tilde(static_cast<std::int64_t>(r.ratio), fi);
    const ExactRational tilde_expected(BigInt(totient(fi)), BigInt(12) * fi);
    if (tilde != tilde_expected)
        throw std::logic_error("dedekind_at_ratio: tilde s(h3, f) = " + tilde.str() + ", expected " + tilde_expected.str());
    return s;
}

}  // namespace dsum
