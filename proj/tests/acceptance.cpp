// Acceptance criteria: one PASS/FAIL line each; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "dsum/arith.hpp"
#include "dsum/class_number.hpp"
#include "dsum/dedekind.hpp"
#include "dsum/eisenstein.hpp"
#include "dsum/mean_square.hpp"
#include "dsum/survey.hpp"

using namespace dsum;

namespace {

constexpr double kMeanSquareRelTol = 1e-8;
constexpr double kClassNumberResidualTol = 1e-4;
constexpr std::size_t kMinMeanSquarePairs = 50;
constexpr std::uint64_t kMaxMeanSquareModulus = 2000;
constexpr int kDenominatorSamples = 10000;

ExactRational q(long long n, long long d) { return ExactRational(BigInt(n), BigInt(d)); }

std::uint64_t pow_u(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

struct Row {
    std::uint64_t n, c_prime, c_leq0;
};

std::string scan_rows(std::uint64_t B, const std::vector<Row>& rows) {
    std::ostringstream bad;
    for (const auto& r : rows) {
        const auto got = scan_fixed_n(r.n, B);
        if (got.c_prime != r.c_prime || got.c_leq0 != r.c_leq0)
            bad << "n=" << r.n << " got (" << got.c_prime << ", " << got.c_leq0 << ") expected (" << r.c_prime << ", "
                << r.c_leq0 << "); ";
    }
    return bad.str();
}

// Each criterion returns an empty string on success, a failure detail otherwise.
std::string c1() {
    return scan_rows(100000, {{5, 2387, 1335}, {7, 1593, 823}, {9, 1592, 838}, {11, 945, 506}, {13, 798, 397}, {15, 1189, 648}});
}

std::string c2() {
    return scan_rows(1000000,
                     {{9, 13063, 6820}, {5, 19617, 10403}, {7, 13063, 6770}, {11, 7858, 4099}, {13, 6539, 3307}, {15, 9807, 5129}});
}

std::string c3() {
    const auto r = scan_window(9, 10000000000ULL, 1000000);
    if (r.c_prime != 7226 || r.c_leq0 != 3695 || r.rho() != "0.51134")
        return "got (" + std::to_string(r.c_prime) + ", " + std::to_string(r.c_leq0) + ", " + r.rho() + ")";
    return {};
}

std::string c4() {
    std::ostringstream bad;
    auto expect = [&](const char* what, const ExactRational& got, const ExactRational& want) {
        if (got != want) bad << what << " = " << got << " expected " << want << "; ";
    };
    expect("tilde s(29,91)", dedekind_sum_tilde(29, 91), q(-22, 91));
    expect("tilde s(53,91)", dedekind_sum_tilde(53, 91), q(-46, 91));
    expect("tilde S<29>", subgroup_sum_tilde(Subgroup::generated_by(91, {29})), q(610, 91));
    expect("tilde S<53>", subgroup_sum_tilde(Subgroup::generated_by(91, {53})), q(562, 91));
    for (const auto& h : order3_subgroups_from_ef(91)) expect("tilde S(E_f)", subgroup_sum_tilde(h), q(666, 91));
    expect("tilde s(9,91)", dedekind_sum_tilde(9, 91), q(6, 91));
    return bad.str();
}

std::string c5() {
    for (std::uint64_t p = 7; p <= 10000; p += 6)
        if (is_prime(p) && n_value(p, subgroup_of_order(3, p)) != -1) return "p=" + std::to_string(p);
    return {};
}

std::string c6() {
    std::ostringstream bad;
    for (auto [n, p] : std::vector<std::pair<long long, std::uint64_t>>{{3, 7}, {5, 31}, {7, 127}, {13, 8191}}) {
        const auto got = n_value(p, Subgroup::generated_by(p, {2}));
        if (got != ExactRational(2 * static_cast<long long>(p) - (6 * n - 3))) bad << "p=" << p << " got " << got << "; ";
    }
    return bad.str();
}

std::string c7() {
    for (std::int64_t d = 1; d <= 300; ++d)
        for (std::int64_t c = 0; c < d; ++c)
            if (std::gcd(c, d) == 1 && dedekind_sum(c, d) != dedekind_sum_naive(c, d))
                return "(" + std::to_string(c) + ", " + std::to_string(d) + ")";
    return {};
}

std::string c8() {
    std::vector<Subgroup> cases;
    auto add = [&](const Subgroup& h) {
        if (!h.contains_minus_one()) cases.push_back(h);
    };
    for (std::uint64_t f : {7u, 9u, 13u, 91u, 97u}) add(Subgroup::generated_by(f, {}));
    for (std::uint64_t f : {35u, 91u, 120u, 221u, 455u, 1001u, 1729u, 1995u}) {
        std::set<std::vector<std::uint64_t>> seen;
        for (std::uint64_t x = 2; x < f && seen.size() < 4; ++x) {
            if (std::gcd(x, f) != 1) continue;
            const auto h = Subgroup::generated_by(f, {x});
            if (!h.contains_minus_one() && seen.insert(h.elements()).second) add(h);
        }
    }
    for (std::uint64_t p : {3u, 5u, 7u, 13u})
        for (std::uint64_t fp : {p, 3 * p, p * p, 5 * p})
            if (p * fp <= kMaxMeanSquareModulus) add(kernel_subgroup(p * fp, fp));
    for (std::uint64_t p : {19u, 37u, 73u, 127u, 163u, 271u, 1009u, 1999u})
        for (std::uint64_t n : {3u, 9u})
            if ((p - 1) % n == 0) add(subgroup_of_order(n, p));
    for (const auto& h : order3_subgroups_from_ef(1729)) add(h);

    for (const auto& h : cases) {
        const std::uint64_t f = h.modulus();
        if (f > kMaxMeanSquareModulus) return "modulus out of range";
        const double exact = mean_square_exact(f, h).approx();
        const double err = std::abs(mean_square_numeric(f, h) - exact) / exact;
        if (!(err < kMeanSquareRelTol)) return "f=" + std::to_string(f) + " relative error " + std::to_string(err);
    }
    if (cases.size() < kMinMeanSquarePairs) return "only " + std::to_string(cases.size()) + " pairs";
    return {};
}

std::string c9() {
    for (std::uint64_t p : {3, 5, 7, 13})
        for (unsigned n : {1u, 2u})
            for (std::uint64_t fp : {p, 3 * p, p * p, 5 * p}) {
                const std::uint64_t pn = pow_u(p, n), f = pn * fp;
                const auto s = subgroup_sum_S(kernel_subgroup(f, fp));
                const std::string where = "p=" + std::to_string(p) + " n=" + std::to_string(n) + " f'=" + std::to_string(fp);
                if (s != kernel_sum_closed(p, n, fp)) return where + ": closed form";
                const ExactRational v = s * ExactRational(BigInt(2 * std::gcd<std::uint64_t>(3, f) * (f / pn)));
                if (!v.is_integer()) return where + ": not integral";
                if (v.numerator() % p == 0) return where + ": divisible by p";
                if ((abs(v.numerator()) % 2 == 1) != (f % 4 == 3)) return where + ": parity";
            }
    return {};
}

std::string c10() {
    for (std::uint64_t p : {3, 5, 7})
        for (unsigned m = 1; m <= 6; ++m) {
            const std::uint64_t f = pow_u(p, m);
            for (unsigned n = 1; 2 * n <= m; ++n) {
                const auto expected = s_near_one_closed(static_cast<std::int64_t>(f), static_cast<std::int64_t>(f / pow_u(p, n)));
                for (auto h : elements_of_order(pow_u(p, n), f))
                    if (dedekind_sum(static_cast<std::int64_t>(h), static_cast<std::int64_t>(f)) != expected)
                        return "constancy at h=" + std::to_string(h) + " f=" + std::to_string(f);
            }
            for (unsigned n = 1; n + 1 <= m; ++n) {
                const auto e = elements_of_order(pow_u(p, n), f);
                ExactRational sum = 0;
                for (auto h : e) sum += dedekind_sum(static_cast<std::int64_t>(h), static_cast<std::int64_t>(f));
                if (sum / ExactRational(static_cast<long long>(e.size())) != mean_order_closed(p, m, n))
                    return "mean value at p=" + std::to_string(p) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
            }
        }
    if (dedekind_sum(4, 27) == dedekind_sum(13, 27) || dedekind_sum(4, 27) != q(73, 162) ||
        dedekind_sum(13, 27) != q(-143, 162))
        return "non-constancy witness";
    return {};
}

std::string c11() {
    std::mt19937_64 rng(20261017);
    int done = 0;
    while (done < kDenominatorSamples) {
        const auto d = static_cast<std::int64_t>(rng() % 1000000) + 1;
        const auto c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d));
        if (std::gcd(c, d) != 1) continue;
        if (!(dedekind_sum(c, d) * ExactRational(2 * d * std::gcd<std::int64_t>(3, d))).is_integer())
            return "(" + std::to_string(c) + ", " + std::to_string(d) + ")";
        ++done;
    }
    for (std::uint64_t f = 3; f <= 1000; f += 2) {
        std::set<std::vector<std::uint64_t>> seen;
        for (std::uint64_t x = 1; x < f; ++x) {
            if (std::gcd(x, f) != 1) continue;
            const auto h = Subgroup::generated_by(f, {x});
            if (!seen.insert(h.elements()).second) continue;
            const ExactRational v =
                subgroup_sum_S(h) * ExactRational(BigInt(2 * std::gcd<std::uint64_t>(3, f) * (f / trace(h).gcd)));
            if (!v.is_integer() || (v.numerator() - h.order() * (f - 1) / 2) % 2 != 0)
                return "parity at f=" + std::to_string(f) + " x=" + std::to_string(x);
        }
    }
    return {};
}

std::string c12() {
    for (std::uint64_t f = 4; f <= 10000; ++f) {
        if (!admits_eisenstein_ratios(f)) continue;
        const auto primes = distinct_primes(static_cast<std::int64_t>(f));
        if (e_f(f).size() != (std::size_t{1} << primes.size())) return "|E_f| at f=" + std::to_string(f);
        ExactRational prod = 1;
        for (auto p : primes) prod *= q(static_cast<long long>(p) + 1, static_cast<long long>(p));
        const ExactRational expected = ExactRational(BigInt(totient(static_cast<std::int64_t>(f)))) / ExactRational(12) *
                                       (prod - q(1, static_cast<long long>(f)));
        for (const auto& h : order3_subgroups_from_ef(f))
            if (subgroup_sum_tilde(h) != expected) return "closed form at f=" + std::to_string(f);
    }
    return {};
}

std::string c13() {
    const auto h23 = relative_class_number(23, 22);
    if (h23.h_minus != 3 || !(h23.residual < kClassNumberResidualTol)) return "h-(Q(zeta_23)) = " + h23.h_minus.str();
    for (std::uint64_t p : {7, 11, 13, 19, 23}) {
        const auto h = relative_class_number(p, p - 1);
        if (!(h.residual < kClassNumberResidualTol)) return "residual at p=" + std::to_string(p);
        if (h.h_minus.convert_to<double>() > cyclotomic_simplified_bound(p)) return "cyclotomic bound at p=" + std::to_string(p);
    }
    for (std::uint64_t p : {7, 13, 19, 31, 37, 43}) {
        const auto h = relative_class_number(p, (p - 1) / 3);
        const auto b = upper_bound_h3_field(p);
        if (!(h.residual < kClassNumberResidualTol)) return "residual at p=" + std::to_string(p);
        if (!(h.h_minus.convert_to<double>() <= b.mean_square_bound && b.mean_square_bound <= b.simplified_bound))
            return "degree (p-1)/3 chain at p=" + std::to_string(p);
    }
    return {};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<std::string()>>> criteria = {
        {"density rows at B = 10^5", c1},
        {"density rows at B = 10^6", c2},
        {"windowed scan n = 9, A = 10^10, span 10^6", c3},
        {"restricted sums mod 91", c4},
        {"N(H_3, p) = -1 for p = 1 mod 6, p <= 10^4", c5},
        {"Mersenne identity", c6},
        {"fast Dedekind sum equals sawtooth oracle, d <= 300", c7},
        {"numeric mean square within 1e-8 of the exact value", c8},
        {"kernel subgroup closed form and consequences", c9},
        {"constancy, mean value and non-constancy witness", c10},
        {"denominator bound and parity on cyclic subgroups", c11},
        {"Eisenstein ratio sets and closed form, f <= 10^4", c12},
        {"relative class numbers and bounds", c13},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        try {
            detail = criteria[i].second();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (detail.empty()) {
            std::printf("PASS %2zu %s (%.2fs)\n", i + 1, criteria[i].first, secs);
        } else {
            ++failed;
            std::printf("FAIL %2zu %s: %s\n", i + 1, criteria[i].first, detail.c_str());
        }
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
