#include "dsum/verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dsum/arith.hpp"
#include "dsum/class_number.hpp"
#include "dsum/dedekind.hpp"
#include "dsum/eisenstein.hpp"
#include "dsum/mean_square.hpp"
#include "dsum/survey.hpp"
#include "dsum/unit_group.hpp"

namespace dsum {

namespace {

class Checker {
public:
    explicit Checker(VerifyReport& report) : report_(report) {}

    void operator()(const std::function<bool()>& test, const std::function<std::string()>& detail) {
        ++report_.run;
        bool ok = false;
        std::string error;
        try {
            ok = test();
        } catch (const std::exception& e) {
            error = std::string(" (exception: ") + e.what() + ")";
        }
        if (ok) ++report_.passed;
        else if (report_.first_failure.empty()) report_.first_failure = detail() + error;
    }

private:
    VerifyReport& report_;
};

std::uint64_t pick(std::uint64_t requested, std::uint64_t fallback) { return requested ? requested : fallback; }

std::string str(const ExactRational& r) { return r.str(); }

std::uint64_t upow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

// Every cyclic subgroup of (Z/fZ)^*, each listed once.
std::vector<Subgroup> cyclic_subgroups(std::uint64_t f) {
    std::vector<Subgroup> out;
    std::vector<char> done(f, 0);
    for (std::uint64_t x = 1; x < f; ++x) {
        if (std::gcd(x, f) != 1 || done[x]) continue;
        Subgroup h = Subgroup::generated_by(f, {x});
        const std::uint64_t n = h.order();
        std::uint64_t y = 1;
        for (std::uint64_t k = 0; k < n; ++k) {
            if (std::gcd(k, n) == 1) done[y] = 1;
            y = mulmod(y, x, f);
        }
        out.push_back(std::move(h));
    }
    return out;
}

void suite_reciprocity(const VerifyOptions& opt, Checker& check) {
    const std::uint64_t max_d = pick(opt.max_modulus, 300);
    for (std::int64_t d = 1; d <= static_cast<std::int64_t>(max_d); ++d)
        for (std::int64_t c = 0; c < d; ++c) {
            if (std::gcd(c, d) != 1) continue;
            check([&] { return dedekind_sum(c, d) == dedekind_sum_naive(c, d); },
                  [&] { return "oracle: s(" + std::to_string(c) + "," + std::to_string(d) + ") fast " +
                               str(dedekind_sum(c, d)) + " naive " + str(dedekind_sum_naive(c, d)); });
        }
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::int64_t> dist(2, 1'000'000);
    for (int i = 0; i < 500;) {
        std::int64_t c = dist(rng), d = dist(rng);
        if (c == d || std::gcd(c, d) != 1) continue;
        ++i;
        check([&] {
                  return dedekind_sum(c, d) + dedekind_sum(d, c) ==
                         ExactRational(BigInt(c) * c + BigInt(d) * d - BigInt(3) * c * d + 1, BigInt(12) * c * d);
              },
              [&] { return "reciprocity at (" + std::to_string(c) + "," + std::to_string(d) + ")"; });
        check([&] { return dedekind_sum(c + d, d) == dedekind_sum(c, d); },
              [&] { return "periodicity at (" + std::to_string(c) + "," + std::to_string(d) + ")"; });
    }
    const std::int64_t small = static_cast<std::int64_t>(std::min<std::uint64_t>(max_d, 200));
    for (std::int64_t d = 2; d <= small; ++d)
        for (std::int64_t c = 1; c < d; ++c) {
            if (std::gcd(c, d) != 1) continue;
            const auto inv = static_cast<std::int64_t>(invmod(static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(d)));
            check([&] { return dedekind_sum(inv, d) == dedekind_sum(c, d); },
                  [&] { return "inverse invariance at (" + std::to_string(c) + "," + std::to_string(d) + ")"; });
            check([&] { return dedekind_sum_naive(d - c, d) == -dedekind_sum_naive(c, d) &&
                               dedekind_sum(-c, d) == -dedekind_sum(c, d); },
                  [&] { return "oddness at (" + std::to_string(c) + "," + std::to_string(d) + ")"; });
        }
    std::uniform_int_distribution<std::uint64_t> wide(2, (std::uint64_t{1} << 41) - 1);
    for (int i = 0; i < 200;) {
        const std::uint64_t d = wide(rng), c = wide(rng) % d;
        if (c == 0 || std::gcd(c, d) != 1) continue;
        ++i;
        check([&] { return to_big(dedekind_scaled_i128(c, d)) == dedekind_scaled_big(c, d); },
              [&] { return "128-bit vs bigint at (" + std::to_string(c) + "," + std::to_string(d) + ")"; });
    }
}

void suite_denominators(const VerifyOptions& opt, Checker& check) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::int64_t> dist(1, 1'000'000);
    for (int i = 0; i < 10'000;) {
        const std::int64_t d = dist(rng), c = dist(rng);
        if (std::gcd(c, d) != 1) continue;
        ++i;
        check([&] { return (ExactRational(BigInt(2) * d * std::gcd<std::int64_t>(3, d)) * dedekind_sum(c, d)).is_integer(); },
              [&] { return "2d gcd(3,d) s(c,d) not integral at (" + std::to_string(c) + "," + std::to_string(d) + ")"; });
    }
    for (std::uint64_t p = 7; p <= 10'000; p += 12) {
        if (!is_prime(p)) continue;
        check([&] {
                  const ExactRational v = ExactRational(BigInt(2) * p) * s_one(static_cast<std::int64_t>(p));
                  return v.is_integer() && v.numerator() % 2 == 1 && v.numerator() % p != 0 &&
                         v == ExactRational(BigInt(p - 1) * (p - 2), 6);
              },
              [&] { return "optimality witness fails at p = " + std::to_string(p); });
    }
    const std::uint64_t max_f = pick(opt.max_modulus, 1000);
    for (std::uint64_t f = 3; f <= max_f; ++f) {
        for (const auto& h : cyclic_subgroups(f)) {
            const TraceValue t = trace(h);
            if (h.order() > 1)
                check([&] { return t.gcd > 1; }, [&] { return "gcd(f, T) = 1 at f = " + std::to_string(f); });
            if (f % 2 == 0) continue;
            check([&] {
                      const ExactRational v = ExactRational(BigInt(2) * std::gcd<std::uint64_t>(3, f) * (f / t.gcd)) * subgroup_sum_S(h);
                      const std::uint64_t parity = (h.order() * ((f - 1) / 2)) % 2;
                      return v.is_integer() && static_cast<std::uint64_t>(abs(v.numerator()) % 2) == parity;
                  },
                  [&] { return "trace-refined parity fails at f = " + std::to_string(f) + ", H = <" +
                               std::to_string(h.generators().front()) + ">"; });
        }
    }
}

void suite_theorem_parity(const VerifyOptions& opt, Checker& check) {
    const std::uint64_t max_p = pick(opt.max_modulus, 2000);
    for (std::uint64_t p = 3; p <= max_p; p += 2) {
        if (!is_prime(p)) continue;
        std::uint64_t odd = p - 1;
        while (odd % 2 == 0) odd /= 2;
        for (auto n : divisors(static_cast<std::int64_t>(odd))) {
            if (n == 1) {
                check([&] { return n_value(p, Subgroup::generated_by(p, {1})) ==
                                   ExactRational(2 - 3 * BigInt(p), BigInt(p)); },
                      [&] { return "N(H_1, p) closed form fails at p = " + std::to_string(p); });
                continue;
            }
            check([&] {
                      const Subgroup h = subgroup_of_order(n, p);
                      const ExactRational two_s = ExactRational(2) * subgroup_sum_S(h);
                      const ExactRational nv = n_value(p, h);
                      const SurveyRecord rec = survey_record(p, n);
                      return two_s.is_integer() && (two_s.numerator() % 2 != 0) == (((p - 1) / 2) % 2 != 0) &&
                             nv.is_integer() && nv.numerator() % 2 != 0 && rec.N == nv.numerator() &&
                             rec.two_S == two_s.numerator();
                  },
                  [&] { return "2S parity fails at (p, n) = (" + std::to_string(p) + "," + std::to_string(n) + ")"; });
        }
    }
    for (std::uint64_t p = 7; p <= 10'000; p += 6) {
        if (!is_prime(p)) continue;
        check([&] { return n_value(p, subgroup_of_order(3, p)) == ExactRational(-1); },
              [&] { return "N(H_3, p) != -1 at p = " + std::to_string(p); });
    }
    for (unsigned n : {3u, 5u, 7u, 13u}) {
        const std::uint64_t p = (std::uint64_t{1} << n) - 1;
        check([&] { return n_value(p, Subgroup::generated_by(p, {2})) == ExactRational(BigInt(2) * p - (6 * n - 3)); },
              [&] { return "Mersenne identity fails at p = " + std::to_string(p); });
    }
}

void suite_kernel_theorem(const VerifyOptions& opt, Checker& check) {
    const std::uint64_t cap = pick(opt.max_modulus, ~std::uint64_t{0});
    for (std::uint64_t p : {3u, 5u, 7u, 13u})
        for (unsigned n : {1u, 2u}) {
            std::set<std::uint64_t> fps{p, 3 * p, p * p, 5 * p};
            for (std::uint64_t fp : fps) {
                const std::uint64_t pn = upow(p, n), f = pn * fp;
                if (f > cap) continue;
                const std::string where = "(p,n,f') = (" + std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(fp) + ")";
                const Subgroup h = kernel_subgroup(f, fp);
                check([&] { return h.order() == pn && subgroup_sum_S(h) == kernel_sum_closed(p, n, fp); },
                      [&] { return "kernel closed form fails at " + where; });
                check([&] {
                          BigInt t = 0;
                          for (std::uint64_t k = 0; k < pn; ++k) t += 1 + k * fp;
                          return t == BigInt(pn) + BigInt((pn - 1) / 2) * f && trace(h).gcd == pn;
                      },
                      [&] { return "kernel trace fails at " + where; });
                check([&] {
                          const ExactRational v = ExactRational(BigInt(2) * std::gcd<std::uint64_t>(3, f) * (f / pn)) * subgroup_sum_S(h);
                          if (!v.is_integer() || v.numerator() % p == 0) return false;
                          return (v.numerator() % 2 != 0) == (f % 4 == 3);
                      },
                      [&] { return "kernel integrality/parity fails at " + where; });
                check([&] { return mean_square_exact(f, h) == mean_square_closed_trivial(fp); },
                      [&] { return "M(f, H_{p^n}) != M(f', {1}) at " + where; });
            }
        }
}

void suite_constancy(const VerifyOptions& opt, Checker& check) {
    const std::uint64_t cap = pick(opt.max_modulus, upow(13, 6));
    for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u})
        for (unsigned m = 2; m <= 6; ++m) {
            const std::uint64_t f = upow(p, m);
            if (f > cap) continue;
            for (unsigned n = 1; n <= m - 1; ++n) {
                const std::uint64_t pn = upow(p, n), step = f / pn;
                const std::string where = "(p,m,n) = (" + std::to_string(p) + "," + std::to_string(m) + "," + std::to_string(n) + ")";
                std::vector<std::uint64_t> elems;
                for (std::uint64_t k = 1; k < pn; ++k)
                    if (k % p != 0) elems.push_back(1 + k * step);
                if (f <= 20'000)
                    check([&] { return elements_of_order(pn, f) == elems; },
                          [&] { return "order-p^n element set mismatch at " + where; });
                ExactRational total;
                bool constant = true;
                const ExactRational closed = 2 * n <= m ? s_near_one_closed(static_cast<std::int64_t>(f), static_cast<std::int64_t>(step))
                                                        : ExactRational();
                for (auto h : elems) {
                    const ExactRational s = dedekind_sum(static_cast<std::int64_t>(h), static_cast<std::int64_t>(f));
                    total += s;
                    if (2 * n <= m && s != closed) constant = false;
                }
                if (2 * n <= m)
                    check([&] { return constant; }, [&] { return "constancy fails at " + where; });
                check([&] { return total / ExactRational(static_cast<long long>(elems.size())) == mean_order_closed(p, m, n); },
                      [&] { return "order-p^n mean value fails at " + where; });
            }
        }
    check([] { return dedekind_sum(4, 27) == ExactRational(73, 162) && dedekind_sum(13, 27) == ExactRational(-143, 162) &&
                      element_order(4, 27) == 9 && element_order(13, 27) == 9; },
          [] { return "non-constancy witness s(4,27) vs s(13,27)"; });
}

void suite_mean_square(const VerifyOptions& opt, Checker& check) {
    const std::uint64_t max_f = pick(opt.max_modulus, 2000);
    for (std::uint64_t f = 3; f <= max_f; ++f)
        check([&] { return mean_square_exact(f, Subgroup::generated_by(f, {})) == mean_square_closed_trivial(f); },
              [&] { return "M(f,{1}) closed form fails at f = " + std::to_string(f); });

    const std::vector<std::uint64_t> moduli{7, 9, 13, 15, 19, 21, 25, 27, 31, 35, 37, 45, 49, 63, 75, 91, 105, 117, 125,
                                            133, 169, 189, 217, 243, 247, 273, 343, 351, 427, 507, 625, 637, 729, 1001,
                                            1183, 1331, 1729, 1801, 1953};
    for (std::uint64_t f : moduli) {
        if (f > max_f) continue;
        std::vector<Subgroup> hs{Subgroup::generated_by(f, {})};
        for (std::uint64_t x = 2; x < f && hs.size() < 3; ++x) {
            if (std::gcd(x, f) != 1) continue;
            const std::uint64_t ord = element_order(static_cast<std::int64_t>(x), f);
            if (ord % 2 == 0) continue;
            Subgroup h = Subgroup::generated_by(f, {x});
            if (std::find(hs.begin(), hs.end(), h) == hs.end()) hs.push_back(std::move(h));
        }
        for (auto fp : divisors(static_cast<std::int64_t>(f))) {
            if (fp == f || ((f / fp) % 2 == 0) || distinct_primes(static_cast<std::int64_t>(fp)) != distinct_primes(static_cast<std::int64_t>(f)))
                continue;
            hs.push_back(kernel_subgroup(f, fp));
        }
        for (const auto& h : hs) {
            check([&] {
                      const double exact = mean_square_exact(f, h).approx();
                      return std::abs(mean_square_numeric(f, h) - exact) / exact < 1e-8;
                  },
                  [&] { return "numeric vs exact mean square fails at f = " + std::to_string(f) + ", |H| = " + std::to_string(h.order()); });
        }
    }
    for (std::uint64_t p = 7; p <= std::min<std::uint64_t>(max_f, 2000); p += 6) {
        if (!is_prime(p)) continue;
        check([&] { return mean_square_exact(p, subgroup_of_order(3, p)).coefficient == ExactRational(BigInt(p - 1), BigInt(6) * p); },
              [&] { return "M(p, H_3) closed form fails at p = " + std::to_string(p); });
    }
    for (std::uint64_t f : {9u, 25u, 27u, 49u, 121u, 125u}) {
        if (f > max_f) continue;
        check([&] { return std::abs(euler_correction_pi(f, Subgroup::generated_by(f, {})) - 1.0) < 1e-12; },
              [&] { return "Pi(f, H) != 1 at prime power f = " + std::to_string(f); });
    }
}

void suite_eisenstein(const VerifyOptions& opt, Checker& check) {
    const std::uint64_t max_f = pick(opt.max_modulus, 10'000);
    for (std::uint64_t f = 4; f <= max_f; ++f) {
        if (!admits_eisenstein_ratios(f)) continue;
        const auto t = distinct_primes(static_cast<std::int64_t>(f)).size();
        const auto ratios = e_f(f);
        check([&] {
                  if (ratios.size() != (std::size_t{1} << t)) return false;
                  return std::all_of(ratios.begin(), ratios.end(), [&](const RatioClass& r) { return element_order(static_cast<std::int64_t>(r.ratio), f) == 3; });
              },
              [&] { return "|E_f| != 2^t or order != 3 at f = " + std::to_string(f); });
        // phi(f)/12 (prod (1 + 1/p) - 1/f), i.e. f/2 times the M(f, H_3) coefficient.
        const ExactRational closed = mean_square_closed_h3(f).coefficient * ExactRational(BigInt(f), 2);
        const auto subgroups = order3_subgroups_from_ef(f);
        check([&] { return subgroups.size() == (std::size_t{1} << (t - 1)); },
              [&] { return "expected 2^(t-1) subgroups at f = " + std::to_string(f); });
        for (const auto& h : subgroups)
            check([&] { return subgroup_sum_tilde(h) == closed && mean_square_exact(f, h) == mean_square_closed_h3(f); },
                  [&] { return "closed form for tilde S(f, H_3) fails at f = " + std::to_string(f); });
        if (f <= 2000)
            for (const auto& r : ratios)
                for (auto delta : divisors(static_cast<std::int64_t>(f)))
                    check([&] { dedekind_at_ratio(f, delta, r); return true; },
                          [&] { return "s(h3, delta) fails at f = " + std::to_string(f) + ", delta = " + std::to_string(delta); });
    }
    if (max_f >= 91)
        check([] {
                  return subgroup_sum_tilde(Subgroup::generated_by(91, {29})) == ExactRational(610, 91) &&
                         subgroup_sum_tilde(Subgroup::generated_by(91, {53})) == ExactRational(562, 91) &&
                         mean_square_closed_h3(91).coefficient == ExactRational(1332, 8281);
              },
              [] { return "f = 91 counterexample values"; });
}

void suite_class_number(const VerifyOptions&, Checker& check) {
    check([] { const auto r = relative_class_number(23, 22); return r.h_minus == 3 && r.residual < 1e-4; },
          [] { return "h^-(Q(zeta_23)) != 3"; });
    for (std::uint64_t p : {7u, 11u, 13u, 19u, 23u})
        check([&] {
                  const double h = relative_class_number(p, p - 1).h_minus.convert_to<double>();
                  return h <= upper_bound_subfield(p, p - 1) && upper_bound_subfield(p, p - 1) <= cyclotomic_simplified_bound(p);
              },
              [&] { return "cyclotomic bound chain fails at p = " + std::to_string(p); });
    for (std::uint64_t p : {7u, 13u, 19u, 31u, 37u, 43u})
        check([&] {
                  const double h = relative_class_number(p, (p - 1) / 3).h_minus.convert_to<double>();
                  const H3Bounds b = upper_bound_h3_field(p);
                  return h <= b.mean_square_bound && b.mean_square_bound <= b.simplified_bound;
              },
              [&] { return "degree (p-1)/3 bound chain fails at p = " + std::to_string(p); });
    for (std::uint64_t p : {13u, 19u, 31u, 37u, 43u, 61u, 67u, 73u})
        check([&] {
                  const std::uint64_t m = (p - 1) / 3, n = m / 2;
                  const double heuristic = bound_from_mean_square(p, m, PiSquared{ExactRational(1, 6)});
                  const double expected = 2.0 * std::pow(static_cast<double>(p) / 24.0, static_cast<double>(n) / 2.0);
                  return std::abs(heuristic - expected) <= 1e-12 * expected;
              },
              [&] { return "pi^2/6 heuristic bound mismatch at p = " + std::to_string(p); });
}

using SuiteFn = void (*)(const VerifyOptions&, Checker&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> s{
        {"reciprocity", suite_reciprocity},   {"denominators", suite_denominators}, {"theorem-parity", suite_theorem_parity},
        {"kernel-theorem", suite_kernel_theorem}, {"constancy", suite_constancy}, {"mean-square", suite_mean_square},
        {"eisenstein", suite_eisenstein},     {"class-number", suite_class_number}};
    return s;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : suites()) v.push_back(name);
        v.emplace_back("all");
        return v;
    }();
    return names;
}

VerifyReport run_verify(const std::string& suite, const VerifyOptions& options) {
    VerifyReport report;
    report.suite = suite;
    bool found = false;
    for (const auto& [name, fn] : suites()) {
        if (suite != "all" && suite != name) continue;
        found = true;
        VerifyReport sub;
        sub.suite = name;
        Checker sub_check(sub);
        fn(options, sub_check);
        report.run += sub.run;
        report.passed += sub.passed;
        if (report.first_failure.empty() && !sub.first_failure.empty()) report.first_failure = name + ": " + sub.first_failure;
    }
    if (!found) throw std::invalid_argument("unknown verify suite: " + suite);
    return report;
}

}  // namespace dsum
