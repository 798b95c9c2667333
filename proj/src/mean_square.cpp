#include "dsum/mean_square.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "dsum/arith.hpp"
#include "dsum/dedekind.hpp"

namespace dsum {

namespace {

using Real50 = boost::multiprecision::cpp_bin_float_50;

void require_modulus(std::uint64_t f, const Subgroup& h) {
    if (h.modulus() != f) throw std::invalid_argument("subgroup modulus does not match f");
}

// Sum over h in H of s(h mod d, d), as an exact rational.
ExactRational sum_reduced(const Subgroup& h, std::uint64_t d) {
    BigInt total = 0;
    for (auto x : h.elements()) total += dedekind_scaled(static_cast<std::int64_t>(x % d), static_cast<std::int64_t>(d));
    return ExactRational(total, BigInt(12) * d);
}

ExactRational prime_product(std::uint64_t f) {
    ExactRational prod = 1;
    for (auto p : distinct_primes(static_cast<std::int64_t>(f))) prod *= ExactRational(BigInt(p + 1), BigInt(p));
    return prod;
}

BigInt ipow(std::uint64_t b, unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

double PiSquared::approx() const { return coefficient.to_double() * std::numbers::pi * std::numbers::pi; }

std::string PiSquared::decimal(int significant) const {
    const Real50 pi = boost::math::constants::pi<Real50>();
    Real50 v = Real50(coefficient.numerator()) / Real50(coefficient.denominator()) * pi * pi;
    return v.str(significant, std::ios_base::fmtflags(0));
}

ExactRational subgroup_sum_S(const Subgroup& h) { return sum_reduced(h, h.modulus()); }

ExactRational subgroup_sum_tilde(const Subgroup& h) {
    const std::uint64_t f = h.modulus();
    if (f < 2) throw std::invalid_argument("subgroup_sum_tilde: modulus must be >= 2");
    ExactRational total;
    for (auto delta : divisors(static_cast<std::int64_t>(f))) {
        const int mu = mobius(static_cast<std::int64_t>(delta));
        if (mu == 0) continue;
        total += ExactRational(BigInt(mu), BigInt(delta)) * sum_reduced(h, f / delta);
    }
    return total;
}

SubgroupSumReport subgroup_sum_report(const Subgroup& h) {
    SubgroupSumReport r{subgroup_sum_S(h), subgroup_sum_tilde(h), std::nullopt, std::nullopt};
    const ExactRational two_s = ExactRational(2) * r.S;
    if (two_s.is_integer()) r.two_S_integer = two_s.numerator();
    if (is_prime(h.modulus())) r.N = ExactRational(12) * r.S - ExactRational(BigInt(h.modulus()));
    return r;
}

PiSquared mean_square_exact(std::uint64_t f, const Subgroup& h) {
    require_modulus(f, h);
    if (f < 3) throw std::invalid_argument("mean_square_exact: f must be >= 3");
    if (h.contains_minus_one()) throw std::invalid_argument("mean_square_exact: -1 lies in H");
    return {ExactRational(2, BigInt(f)) * subgroup_sum_tilde(h)};
}

ExactRational n_value(std::uint64_t p, const Subgroup& h) {
    require_modulus(p, h);
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("n_value: p must be an odd prime");
    const ExactRational n = ExactRational(12) * subgroup_sum_S(h) - ExactRational(BigInt(p));
    if (h.order() > 1) {
        if (!n.is_integer() || n.numerator() % 2 == 0)
            throw std::logic_error("n_value: N(H, p) is not an odd integer: " + n.str());
    }
    return n;
}

PiSquared mean_square_closed_trivial(std::uint64_t f) {
    if (f < 3) throw std::invalid_argument("mean_square_closed_trivial: f must be >= 3");
    const auto fi = static_cast<std::int64_t>(f);
    return {ExactRational(BigInt(totient(fi)), BigInt(6) * f) * (prime_product(f) - ExactRational(3, fi))};
}

PiSquared mean_square_closed_h3(std::uint64_t f) {
    if (f < 2) throw std::invalid_argument("mean_square_closed_h3: f must be >= 2");
    for (auto p : distinct_primes(static_cast<std::int64_t>(f)))
        if (p % 3 != 1) throw std::invalid_argument("mean_square_closed_h3: prime factor not 1 mod 3");
    const auto fi = static_cast<std::int64_t>(f);
    return {ExactRational(BigInt(totient(fi)), BigInt(6) * f) * (prime_product(f) - ExactRational(1, fi))};
}

ExactRational kernel_sum_closed(std::uint64_t p, unsigned n, std::uint64_t f_prime) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("kernel_sum_closed: p must be an odd prime");
    if (n < 1) throw std::invalid_argument("kernel_sum_closed: n must be >= 1");
    if (f_prime <= 1 || f_prime % 2 == 0 || f_prime % p != 0)
        throw std::invalid_argument("kernel_sum_closed: f' must be odd, > 1 and divisible by p");
    const BigInt pn = ipow(p, n), pn1 = pn * p;
    const BigInt f = pn * f_prime;
    return ExactRational(pn1 + pn - 1, BigInt(12) * pn1) * ExactRational(f) - ExactRational(pn, 4) +
           ExactRational(pn, BigInt(6) * f);
}

ExactRational mean_order_closed(std::uint64_t p, unsigned m, unsigned n) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("mean_order_closed: p must be an odd prime");
    if (m < 2 || n < 1 || n > m - 1) throw std::invalid_argument("mean_order_closed: need 1 <= n <= m - 1");
    const BigInt f = ipow(p, m);
    return ExactRational(f, BigInt(12) * ipow(p, 2 * n)) - ExactRational(1, 4) + ExactRational(1, BigInt(6) * f);
}

namespace {

struct LOneEvaluator {
    explicit LOneEvaluator(std::uint64_t f, std::uint64_t exponent) : f(f), exponent(exponent) {
        cot.resize(f);
        for (std::uint64_t a = 1; a < f; ++a) cot[a] = 1.0 / std::tan(std::numbers::pi * static_cast<double>(a) / static_cast<double>(f));
        roots.resize(exponent);
        for (std::uint64_t k = 0; k < exponent; ++k)
            roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(exponent));
    }

    std::complex<double> operator()(const DirichletCharacter& chi) const {
        if (!chi.is_odd()) throw std::invalid_argument("l_one_numeric: character must be odd");
        std::complex<double> sum = 0.0;
        for (std::uint64_t a = 1; a < f; ++a) {
            const auto ph = chi.phase(static_cast<std::int64_t>(a));
            if (ph) sum += roots[*ph] * cot[a];
        }
        return sum * (std::numbers::pi / (2.0 * static_cast<double>(f)));
    }

    std::uint64_t f, exponent;
    std::vector<double> cot;
    std::vector<std::complex<double>> roots;
};

}  // namespace

std::complex<double> l_one_numeric(const DirichletCharacter& chi) {
    return LOneEvaluator(chi.modulus(), chi.table().exponent())(chi);
}

double mean_square_numeric(std::uint64_t f, const Subgroup& h, unsigned threads) {
    require_modulus(f, h);
    const auto chars = odd_characters_trivial_on(h);
    if (chars.empty()) throw std::invalid_argument("mean_square_numeric: no characters");
    const LOneEvaluator eval(f, chars.front().table().exponent());
    std::vector<double> sq(chars.size());
    auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < chars.size(); i += stride) sq[i] = std::norm(eval(chars[i]));
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chars.size())));
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    }
    double total = 0.0;
    for (double v : sq) total += v;
    return total / static_cast<double>(chars.size());
}

double euler_correction_pi(std::uint64_t f, const Subgroup& h) {
    require_modulus(f, h);
    const auto chars = odd_characters_trivial_on(h);
    std::complex<double> prod = 1.0;
    for (auto q : distinct_primes(static_cast<std::int64_t>(f)))
        for (const auto& chi : chars) prod *= 1.0 - primitive_value(chi, static_cast<std::int64_t>(q)) / static_cast<double>(q);
    if (std::abs(prod.imag()) > 1e-9) throw std::logic_error("euler_correction_pi: product is not real");
    return prod.real();
}

}  // namespace dsum
