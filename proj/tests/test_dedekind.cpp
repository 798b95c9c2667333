#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "dsum/arith.hpp"
#include "dsum/dedekind.hpp"
#include "oracles.hpp"

using namespace dsum;

namespace {

ExactRational q(long long n, long long d) { return ExactRational(BigInt(n), BigInt(d)); }

ExactRational from_oracle(const oracle::Rational& r) {
    return ExactRational(BigInt(numerator(r)), BigInt(denominator(r)));
}

}  // namespace

TEST_CASE("dedekind sum examples") {
    CHECK(dedekind_sum(1, 9) == q(14, 27));
    CHECK(dedekind_sum(2, 7) == q(1, 14));
    CHECK(dedekind_sum(4, 9) == q(-4, 27));
    CHECK(dedekind_sum(6, 25) == q(-4, 25));
    CHECK(dedekind_sum(3, 4) == q(-1, 8));
    CHECK(dedekind_sum(1, 1) == 0);
    CHECK(dedekind_sum(1, 2) == 0);
    CHECK(dedekind_sum(-2, 7) == q(-1, 14));
    CHECK(dedekind_sum(9, 7) == q(1, 14));
    CHECK_THROWS_AS(dedekind_sum(2, 8), std::invalid_argument);
    CHECK_THROWS_AS(dedekind_sum_naive(3, 9), std::invalid_argument);
}

TEST_CASE("naive oracle agrees with the sawtooth reference") {
    for (std::int64_t d = 1; d <= 60; ++d)
        for (std::int64_t c = 1; c <= d; ++c)
            if (std::gcd(c, d) == 1) REQUIRE(dedekind_sum_naive(c, d) == from_oracle(oracle::dedekind(c, d)));
}

TEST_CASE("fast engine equals the naive oracle for d <= 300") {
    for (std::int64_t d = 1; d <= 300; ++d)
        for (std::int64_t c = 0; c < d; ++c)
            if (std::gcd(c, d) == 1) REQUIRE(dedekind_sum(c, d) == dedekind_sum_naive(c, d));
}

TEST_CASE("reciprocity on random pairs up to 10^6") {
    std::mt19937_64 rng(3);
    int done = 0;
    while (done < 500) {
        const auto d = static_cast<std::int64_t>(rng() % 999998) + 3;
        const auto c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d - 2)) + 2;
        if (std::gcd(c, d) != 1) continue;
        const ExactRational lhs = dedekind_sum(c, d) + dedekind_sum(d, c);
        const ExactRational rhs(BigInt(c) * c + BigInt(d) * d - 3 * BigInt(c) * d + 1, 12 * BigInt(c) * d);
        REQUIRE(lhs == rhs);
        ++done;
    }
}

TEST_CASE("periodicity, inverse invariance and oddness") {
    for (std::int64_t d = 2; d <= 200; ++d)
        for (std::int64_t c = 1; c < d; ++c) {
            if (std::gcd(c, d) != 1) continue;
            const auto s = dedekind_sum(c, d);
            REQUIRE(dedekind_sum(c + d, d) == s);
            REQUIRE(dedekind_sum(static_cast<std::int64_t>(invmod(c, d)), d) == s);
            REQUIRE(dedekind_sum_naive(d - c, d) == -s);
        }
}

TEST_CASE("denominator bound 2 d gcd(3, d) s(c, d) is integral") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10000; ++i) {
        const auto d = static_cast<std::int64_t>(rng() % 1000000) + 1;
        const auto c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d));
        if (std::gcd(c, d) != 1) continue;
        REQUIRE((dedekind_sum(c, d) * ExactRational(2 * d * std::gcd<std::int64_t>(3, d))).is_integer());
    }
}

TEST_CASE("optimality witness at primes p = 7 mod 12") {
    for (std::int64_t p = 7; p <= 10000; p += 12) {
        if (!is_prime(static_cast<std::uint64_t>(p))) continue;
        const ExactRational v = dedekind_sum(1, p) * ExactRational(2 * p * 1);
        REQUIRE(v == ExactRational((p - 1) * (p - 2) / 6));
        const BigInt n = v.numerator();
        REQUIRE(n % 2 == 1);
        REQUIRE(n % p != 0);
    }
}

TEST_CASE("128-bit and arbitrary precision paths agree") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t d = (rng() >> 24) + 2;
        const std::uint64_t c = rng() % d;
        if (c == 0 || std::gcd(c, d) != 1) continue;
        REQUIRE(to_big(dedekind_scaled_i128(c, d)) == dedekind_scaled_big(c, d));
    }
    // Beyond the 128-bit bound the scaled value still has the reciprocity shape.
    const std::int64_t d = (std::int64_t{1} << 61) - 1, c = 1234567;
    const ExactRational lhs = dedekind_sum(c, d) + dedekind_sum(d, c);
    CHECK(lhs == ExactRational(BigInt(c) * c + BigInt(d) * d - 3 * BigInt(c) * d + 1, 12 * BigInt(c) * d));
    CHECK(dedekind_scaled(1, d) == (BigInt(d) - 1) * (BigInt(d) - 2));
}

TEST_CASE("s(1, d) closed form") {
    CHECK(s_one(9) == q(14, 27));
    for (std::int64_t d = 1; d <= 500; ++d) REQUIRE(s_one(d) == dedekind_sum(1, d));
}

TEST_CASE("restricted sums") {
    CHECK(dedekind_sum_tilde(29, 91) == q(-22, 91));
    CHECK(dedekind_sum_tilde(53, 91) == q(-46, 91));
    CHECK(dedekind_sum_tilde(9, 91) == q(6, 91));
    CHECK(tilde_s_one(91) == dedekind_sum_tilde(1, 91));
    CHECK_THROWS_AS(dedekind_sum_tilde(7, 91), std::invalid_argument);
    for (std::int64_t f = 2; f <= 200; ++f)
        for (std::int64_t c = 1; c < f; ++c) {
            if (std::gcd(c, f) != 1) continue;
            const auto t = dedekind_sum_tilde(c, f);
            const auto ref = oracle::dedekind_restricted_cot(c, f);
            REQUIRE(abs(ref * t.denominator().convert_to<oracle::Float>() - t.numerator().convert_to<oracle::Float>()) < 1e-30);
        }
}

TEST_CASE("closed form near one") {
    CHECK(s_near_one_closed(9, 3) == dedekind_sum(4, 9));
    CHECK(s_near_one_closed(25, 5) == dedekind_sum(6, 25));
    CHECK(s_near_one_closed(4, 2) == dedekind_sum(3, 4));
    CHECK(s_near_one_closed(9, 3) == q(-4, 27));
}

TEST_CASE("constancy on elements of order p^n") {
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        std::int64_t f = p;
        for (int m = 1; m <= 6 && f <= 200000; ++m, f *= p) {
            std::int64_t pn = p;
            for (int n = 1; 2 * n <= m; ++n, pn *= p) {
                const ExactRational expected = s_near_one_closed(f, f / pn);
                for (std::int64_t h = 1; h < f; ++h) {
                    if (h % p == 0) continue;
                    std::int64_t y = h, k = 1;
                    while (y != 1 && k <= pn) y = y * h % f, ++k;
                    if (y == 1 && k == pn) REQUIRE(dedekind_sum(h, f) == expected);
                }
            }
        }
    }
}

TEST_CASE("non-constancy witness mod 27") {
    CHECK(dedekind_sum(4, 27) == q(73, 162));
    CHECK(dedekind_sum(13, 27) == q(-143, 162));
    CHECK_THROWS(s_near_one_closed(27, 3));  // 27 does not divide 9
    CHECK_THROWS(s_near_one_closed(27, 2));
}
