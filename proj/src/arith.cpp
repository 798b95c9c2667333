#include "dsum/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dsum {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    __int128 old_r = static_cast<__int128>(a % m), r = m;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        const __int128 q = old_r / r;
        old_r -= q * r; std::swap(old_r, r);
        old_s -= q * s; std::swap(old_s, s);
    }
    if (old_r != 1 && m != 1) throw std::invalid_argument("invmod: arguments not coprime");
    if (m == 1) return 0;
    old_s %= static_cast<__int128>(m);
    if (old_s < 0) old_s += m;
    return static_cast<std::uint64_t>(old_s);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This witness set is exact below 3.3e24.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        auto step = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void split(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) { out.push_back(n); return; }
    const std::uint64_t d = pollard_rho(n);
    split(d, out);
    split(n / d, out);
}

}  // namespace

Factorization factorize(std::int64_t signed_n) {
    if (signed_n <= 0) throw std::invalid_argument("factorize: n must be positive");
    auto n = static_cast<std::uint64_t>(signed_n);
    std::vector<std::uint64_t> primes;
    auto strip = [&](std::uint64_t p) {
        while (n % p == 0) { primes.push_back(p); n /= p; }
    };
    strip(2);
    strip(3);
    constexpr std::uint64_t trial_limit = 1'000'000;
    for (std::uint64_t p = 5; p <= trial_limit && p * p <= n; p += 6) {
        strip(p);
        strip(p + 2);
        // Early exit keeps the per-call cost low when a large prime cofactor remains.
        if (p == 1001 && n > 1 && is_prime(n)) break;
    }
    split(n, primes);
    std::sort(primes.begin(), primes.end());
    Factorization f;
    for (std::uint64_t p : primes) {
        if (!f.empty() && f.back().p == p) ++f.back().e;
        else f.push_back({p, 1});
    }
    return f;
}

std::uint64_t reconstruct(const Factorization& f) {
    std::uint64_t r = 1;
    for (const auto& [p, e] : f)
        for (unsigned i = 0; i < e; ++i) r *= p;
    return r;
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
    std::vector<std::uint64_t> ds{1};
    for (const auto& [p, e] : f) {
        const std::size_t base = ds.size();
        std::uint64_t pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::vector<std::uint64_t> divisors(std::int64_t n) { return divisors(factorize(n)); }

std::vector<std::uint64_t> distinct_primes(std::int64_t n) {
    std::vector<std::uint64_t> ps;
    for (const auto& pp : factorize(n)) ps.push_back(pp.p);
    return ps;
}

int mobius(std::int64_t n) {
    const auto f = factorize(n);
    for (const auto& pp : f)
        if (pp.e > 1) return 0;
    return f.size() % 2 == 0 ? 1 : -1;
}

std::uint64_t totient(std::int64_t n) {
    std::uint64_t phi = 1;
    for (const auto& [p, e] : factorize(n)) {
        phi *= p - 1;
        for (unsigned i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

std::uint64_t smallest_primitive_root(std::uint64_t m) {
    if (m == 2) return 1;
    if (m == 4) return 3;
    const auto f = factorize(static_cast<std::int64_t>(m));
    if (f.size() != 1 || f[0].p == 2) throw std::invalid_argument("no primitive root for this modulus");
    const std::uint64_t phi = totient(static_cast<std::int64_t>(m));
    const auto qs = distinct_primes(static_cast<std::int64_t>(phi));
    for (std::uint64_t g = 2; g < m; ++g) {
        if (std::gcd(g, m) != 1) continue;
        if (std::all_of(qs.begin(), qs.end(), [&](std::uint64_t q) { return powmod(g, phi / q, m) != 1; }))
            return g;
    }
    throw std::logic_error("primitive root search failed");
}

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace dsum
