#include "dsum/dedekind.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "dsum/arith.hpp"

namespace dsum {

namespace {

std::uint64_t reduce(std::int64_t c, std::int64_t d) {
    if (d < 1) throw std::invalid_argument("dedekind: modulus must be >= 1");
    std::int64_t r = c % d;
    if (r < 0) r += d;
    if (std::gcd(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(d)) != 1 && d > 1)
        throw std::invalid_argument("dedekind: arguments not coprime");
    return static_cast<std::uint64_t>(r);
}

// X(h, k) = 12 k s(h, k) for 0 <= h < k, gcd(h, k) = 1. Unwinds the Euclidean
// chain, then applies
//   X(h, k) = k (q - 3) + (h^2 + 1 + k (r - X(r, h))) / h,   k = q h + r,
// which is reciprocity s(h,k) + s(k,h) = (h^2 + k^2 - 3hk + 1)/(12hk) with
// every term scaled to an integer.
template <typename Int>
Int scaled(std::uint64_t h, std::uint64_t k) {
    if (k == 1) return Int(0);
    if (h == 0 || std::gcd(h, k) != 1) throw std::invalid_argument("dedekind: arguments not coprime");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> chain;
    while (h != 1) {
        chain.emplace_back(h, k);
        const std::uint64_t r = k % h;
        k = h;
        h = r;
    }
    const Int kk = k;
    Int x = (kk - 1) * (kk - 2);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        const Int hi = it->first, ki = it->second;
        const Int q = Int(it->second / it->first), r = Int(it->second % it->first);
        x = ki * (q - 3) + (hi * hi + 1 + ki * (r - x)) / hi;
    }
    return x;
}

constexpr std::uint64_t kNarrowLimit = std::uint64_t{1} << 41;

}  // namespace

__int128 dedekind_scaled_i128(std::uint64_t c, std::uint64_t d) {
    if (d >= kNarrowLimit || c >= d) throw std::invalid_argument("dedekind_scaled_i128: out of range");
    return scaled<__int128>(c, d);
}

BigInt dedekind_scaled_big(std::uint64_t c, std::uint64_t d) { return scaled<BigInt>(c, d); }

BigInt dedekind_scaled(std::int64_t c, std::int64_t d) {
    const std::uint64_t r = reduce(c, d);
    const auto ud = static_cast<std::uint64_t>(d);
    if (ud < kNarrowLimit) return to_big(scaled<__int128>(r, ud));
    return scaled<BigInt>(r, ud);
}

ExactRational dedekind_sum(std::int64_t c, std::int64_t d) {
    return ExactRational(dedekind_scaled(c, d), BigInt(12) * d);
}

ExactRational dedekind_sum_naive(std::int64_t c, std::int64_t d) {
    const std::uint64_t cr = reduce(c, d);
    const auto ud = static_cast<std::uint64_t>(d);
    // ((a/d)) ((ac/d)) = (2a - d)(2 (ac mod d) - d) / (4 d^2); ac is never 0 mod d here.
    BigInt total = 0;
    __int128 acc = 0;
    for (std::uint64_t a = 1; a < ud; ++a) {
        const std::uint64_t ac = mulmod(a, cr, ud);
        acc += static_cast<__int128>(2 * static_cast<__int128>(a) - ud) * (2 * static_cast<__int128>(ac) - ud);
        if (acc > (__int128{1} << 100) || acc < -(__int128{1} << 100)) {
            total += to_big(acc);
            acc = 0;
        }
    }
    total += to_big(acc);
    return ExactRational(total, BigInt(4) * BigInt(ud) * BigInt(ud));
}

ExactRational s_one(std::int64_t d) {
    if (d < 1) throw std::invalid_argument("s_one: d must be >= 1");
    return ExactRational(BigInt(d - 1) * (d - 2), BigInt(12) * d);
}

ExactRational dedekind_sum_tilde(std::int64_t c, std::int64_t f) {
    if (f < 2) throw std::invalid_argument("dedekind_sum_tilde: f must be >= 2");
    reduce(c, f);
    ExactRational total;
    for (std::uint64_t delta : divisors(f)) {
        const int mu = mobius(static_cast<std::int64_t>(delta));
        if (mu == 0) continue;
        const auto sub = static_cast<std::int64_t>(static_cast<std::uint64_t>(f) / delta);
        total += ExactRational(BigInt(mu), BigInt(delta)) * dedekind_sum(c, sub);
    }
    return total;
}

ExactRational tilde_s_one(std::int64_t f) {
    if (f < 2) throw std::invalid_argument("tilde_s_one: f must be >= 2");
    ExactRational prod = 1;
    for (std::uint64_t p : distinct_primes(f)) prod *= ExactRational(BigInt(p + 1), BigInt(p));
    return ExactRational(BigInt(totient(f)), 12) * (prod - ExactRational(3, f));
}

ExactRational s_near_one_closed(std::int64_t f, std::int64_t f_prime) {
    if (f < 1 || f_prime < 1) throw std::invalid_argument("s_near_one_closed: arguments must be positive");
    if (f % f_prime != 0) throw std::invalid_argument("s_near_one_closed: f' must divide f");
    if ((BigInt(f_prime) * f_prime) % f != 0) throw std::invalid_argument("s_near_one_closed: f must divide f'^2");
    return ExactRational(BigInt(f_prime) * f_prime, BigInt(12) * f) - ExactRational(1, 4) +
           ExactRational(1, BigInt(6) * f);
}

}  // namespace dsum
