#include "commands.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "dsum/arith.hpp"
#include "dsum/class_number.hpp"
#include "dsum/dedekind.hpp"
#include "dsum/eisenstein.hpp"
#include "dsum/mean_square.hpp"
#include "dsum/survey.hpp"
#include "dsum/verify.hpp"

namespace dsum::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned default_threads() {
    if (const char* env = std::getenv("DSUM_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

std::string power_label(std::uint64_t v) {
    if (v == 0) return "0";
    std::uint64_t x = v;
    int k = 0;
    while (x % 10 == 0) { x /= 10; ++k; }
    if (x == 1 && k > 1) return "10^" + std::to_string(k);
    return std::to_string(v);
}

json pi_squared_json(const PiSquared& m) {
    return {{"coef_num", m.coefficient.numerator().str()},
            {"coef_den", m.coefficient.denominator().str()},
            {"approx_decimal", m.decimal(30)}};
}

json big_json(const BigInt& v) {
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
    return v.str();
}

std::string render(const ExactRational& r, int decimal) { return decimal > 0 ? r.decimal(decimal) : r.str(); }

}  // namespace

std::uint64_t parse_count(const std::string& text) {
    auto digits = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("not a non-negative integer: " + text);
        return std::stoull(s);
    };
    auto power = [&](std::uint64_t base, std::uint64_t mant, std::uint64_t e) {
        unsigned __int128 v = mant;
        for (std::uint64_t i = 0; i < e; ++i) {
            v *= base;
            if (v > std::numeric_limits<std::uint64_t>::max()) throw UsageError("value out of range: " + text);
        }
        return static_cast<std::uint64_t>(v);
    };
    if (auto pos = text.find('^'); pos != std::string::npos) {
        if (text.substr(0, pos) != "10") throw UsageError("only powers of 10 are accepted: " + text);
        return power(10, 1, digits(text.substr(pos + 1)));
    }
    if (auto pos = text.find_first_of("eE"); pos != std::string::npos)
        return power(10, digits(text.substr(0, pos)), digits(text.substr(pos + 1)));
    return digits(text);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dedekind sums, mean square values of L(1, chi) over subgroups, and prime surveys", "dsum"};
    app.require_subcommand(1);
    int decimal = 0;

    // dedekind
    auto* ded = app.add_subcommand("dedekind", "Exact Dedekind sum s(c, d)");
    std::int64_t c = 0, d = 1;
    bool naive = false, tilde = false;
    ded->add_option("c", c)->required();
    ded->add_option("d", d)->required();
    ded->add_flag("--naive", naive, "Use the O(d) sawtooth oracle");
    ded->add_flag("--tilde", tilde, "Sum restricted to indices coprime to d");
    ded->add_option("--decimal", decimal, "Print a decimal with N places instead of the exact fraction");

    // verify
    auto* ver = app.add_subcommand("verify", "Run a verification battery");
    std::string suite = "all", ver_out = "text";
    std::uint64_t max_modulus = 0, seed = 1;
    ver->add_option("--suite", suite)->check(CLI::IsMember(verify_suite_names()));
    ver->add_option("--max-modulus", max_modulus);
    ver->add_option("--seed", seed);
    ver->add_option("--out", ver_out)->check(CLI::IsMember({"text", "json"}));

    // tables
    auto* tab = app.add_subcommand("tables", "Reproduce density tables rho_n(B) and rho_9(A, B)");
    std::string table, limit_s = "1e5", from_s, span_s;
    unsigned threads = default_threads();
    tab->add_option("--table", table)->required()->check(
        CLI::IsMember({"rho5", "rho7", "rho9", "rho11", "rho13", "rho15", "rho9-window"}));
    tab->add_option("--limit", limit_s, "Largest B (rows at every power of ten up to it)");
    tab->add_option("--from", from_s);
    tab->add_option("--span", span_s);
    tab->add_option("--threads", threads);

    // survey
    auto* sur = app.add_subcommand("survey", "Scan primes p = 1 mod 2n and count N(H_n, p) <= 0");
    std::uint64_t n = 9;
    std::string out_fmt = "json", records_path, checkpoint_path;
    bool all_odd = false;
    sur->add_option("--n", n);
    sur->add_option("--limit", limit_s);
    sur->add_option("--from", from_s);
    sur->add_option("--span", span_s);
    sur->add_flag("--all-odd", all_odd, "Count all pairs (p, n) with n odd dividing p - 1");
    sur->add_option("--threads", threads);
    sur->add_option("--out", out_fmt)->check(CLI::IsMember({"csv", "json"}));
    sur->add_option("--records", records_path, "Write one CSV row per prime");
    sur->add_option("--checkpoint", checkpoint_path, "Checkpoint file; resumed when it exists");

    // ef
    auto* efc = app.add_subcommand("ef", "Eisenstein representations, E_f and order-3 subgroups");
    std::uint64_t ef_f = 0;
    efc->add_option("--f", ef_f)->required();

    // class-number
    auto* cls = app.add_subcommand("class-number", "Relative class number of an imaginary subfield of Q(zeta_p)");
    std::uint64_t p = 0, degree = 0;
    cls->add_option("--p", p)->required();
    cls->add_option("--degree", degree, "Degree m of K (default p - 1)");

    // mean-square
    auto* ms = app.add_subcommand("mean-square", "Exact (and optionally numeric) M(f, H)");
    std::uint64_t ms_f = 0, kernel = 0;
    std::vector<std::uint64_t> gens;
    bool numeric = false;
    ms->add_option("--f", ms_f)->required();
    ms->add_option("--gen", gens, "Generators of H (default: trivial subgroup)");
    ms->add_option("--kernel", kernel, "Use H = {x = 1 mod f'} for this f'");
    ms->add_flag("--numeric", numeric, "Also average |L(1, chi)|^2 numerically");
    ms->add_option("--threads", threads);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (ded->parsed()) {
            ExactRational v = tilde ? dedekind_sum_tilde(c, d) : naive ? dedekind_sum_naive(c, d) : dedekind_sum(c, d);
            out << render(v, decimal) << '\n';
            return 0;
        }
        if (ver->parsed()) {
            const VerifyReport r = run_verify(suite, {max_modulus, seed});
            if (ver_out == "json") {
                out << json{{"suite", r.suite}, {"run", r.run}, {"passed", r.passed}, {"first_failure", r.first_failure}}.dump()
                    << '\n';
            } else {
                out << r.suite << ": " << r.passed << "/" << r.run << " passed\n";
                if (!r.ok()) out << "first failure: " << r.first_failure << '\n';
            }
            return r.ok() ? 0 : 1;
        }
        if (tab->parsed()) {
            ScanOptions opt;
            opt.threads = threads;
            if (table == "rho9-window") {
                if (from_s.empty() || span_s.empty()) throw UsageError("rho9-window needs --from and --span");
                const std::uint64_t A = parse_count(from_s), span = parse_count(span_s);
                const DensityReport r = scan_window(9, A, span, opt);
                out << "A | B | c_prime(A,B) | c_<=0(A,B) | rho_9(A,B)\n";
                out << power_label(A) << " | " << power_label(span) << " | " << r.c_prime << " | " << r.c_leq0 << " | "
                    << r.rho() << "…\n";
                return 0;
            }
            const std::uint64_t tn = std::stoull(table.substr(3));
            const std::uint64_t limit = parse_count(limit_s);
            std::vector<std::uint64_t> bounds;
            for (std::uint64_t b = 100'000; b <= limit; b *= 10) bounds.push_back(b);
            if (bounds.empty() || bounds.back() != limit) {
                if (limit < 100'000 || power_label(limit).rfind("10^", 0) != 0) bounds.push_back(limit);
            }
            out << "B | #{p<=B; p=1 mod " << 2 * tn << "} | #{...; N(H_" << tn << ",p)<=0} | rho_" << tn << "(B)\n";
            for (auto b : bounds) {
                const DensityReport r = scan_fixed_n(tn, b, opt);
                out << power_label(b) << " | " << r.c_prime << " | " << r.c_leq0 << " | " << r.rho() << "…\n";
            }
            return 0;
        }
        if (sur->parsed()) {
            ScanOptions opt;
            opt.threads = threads;
            opt.checkpoint_path = checkpoint_path;
            std::ofstream records;
            if (!records_path.empty()) {
                records.open(records_path);
                if (!records) throw std::runtime_error("cannot open " + records_path);
                records << csv_header() << '\n';
                opt.on_record = [&records](const SurveyRecord& rec) { records << csv_row(rec) << '\n'; };
            }
            ScanRange range;
            if (all_odd) range = {ScanMode::all_odd, 0, 0, parse_count(limit_s)};
            else if (!from_s.empty() || !span_s.empty()) {
                if (from_s.empty() || span_s.empty()) throw UsageError("--from and --span go together");
                range = {ScanMode::window, n, parse_count(from_s), parse_count(span_s)};
            } else range = {ScanMode::fixed, n, 0, parse_count(limit_s)};
            const bool resuming = !checkpoint_path.empty() && std::ifstream(checkpoint_path).good();
            const DensityReport r = resuming ? resume(range, opt) : scan(range, opt);
            if (out_fmt == "json") {
                out << report_json(r) << '\n';
            } else {
                out << "n,mode,A,span_or_B,c_prime,c_leq0,rho\n"
                    << r.range.n << ',' << to_string(r.range.mode) << ',' << r.range.A << ',' << r.range.span_or_B << ','
                    << r.c_prime << ',' << r.c_leq0 << ',' << r.rho(10) << '\n';
            }
            return 0;
        }
        if (efc->parsed()) {
            json j;
            j["f"] = ef_f;
            const auto reps = representations(ef_f);
            const auto ratios = e_f(ef_f);
            const auto subgroups = order3_subgroups_from_ef(ef_f);
            const std::size_t t = distinct_primes(static_cast<std::int64_t>(ef_f)).size();
            j["t"] = t;
            j["representations"] = json::array();
            for (const auto& e : reps) j["representations"].push_back({e.a, e.b});
            j["ratios"] = json::array();
            for (const auto& r : ratios) j["ratios"].push_back(r.ratio);
            j["subgroups"] = json::array();
            bool closed_ok = true, order_ok = true, ratio_ok = true;
            const ExactRational closed = mean_square_closed_h3(ef_f).coefficient * ExactRational(BigInt(ef_f), 2);
            for (const auto& h : subgroups) {
                j["subgroups"].push_back(h.elements());
                closed_ok = closed_ok && subgroup_sum_tilde(h) == closed;
            }
            for (const auto& r : ratios) {
                order_ok = order_ok && element_order(static_cast<std::int64_t>(r.ratio), ef_f) == 3;
                for (auto delta : divisors(static_cast<std::int64_t>(ef_f))) {
                    try {
                        dedekind_at_ratio(ef_f, delta, r);
                    } catch (const std::logic_error&) {
                        ratio_ok = false;
                    }
                }
            }
            j["tilde_S_closed_form"] = closed.str();
            j["checks"] = {{"cardinality_is_2_pow_t", ratios.size() == (std::size_t{1} << t)},
                           {"all_of_order_3", order_ok},
                           {"closed_form_tilde_S", closed_ok},
                           {"dedekind_at_ratio", ratio_ok}};
            out << j.dump() << '\n';
            return 0;
        }
        if (cls->parsed()) {
            const std::uint64_t m = degree ? degree : p - 1;
            const ClassNumberResult h = relative_class_number(p, m);
            const double eq10 = upper_bound_subfield(p, m);
            json j = {{"p", p}, {"degree", m}, {"h_minus", big_json(h.h_minus)}, {"residual", h.residual}, {"bound_eq10", eq10}};
            const double hv = h.h_minus.convert_to<double>();
            bool satisfied = hv <= eq10;
            if (m == p - 1) {
                const double b = cyclotomic_simplified_bound(p);
                j["bound_eq12_or_13"] = b;
                satisfied = satisfied && hv <= b;
            } else if (p % 6 == 1 && m == (p - 1) / 3) {
                const double b = upper_bound_h3_field(p).simplified_bound;
                j["bound_eq12_or_13"] = b;
                satisfied = satisfied && hv <= b;
            } else {
                j["bound_eq12_or_13"] = nullptr;
            }
            j["satisfied"] = satisfied;
            out << j.dump() << '\n';
            return satisfied ? 0 : 1;
        }
        if (ms->parsed()) {
            Subgroup h = kernel ? kernel_subgroup(ms_f, kernel) : Subgroup::generated_by(ms_f, gens);
            const SubgroupSumReport s = subgroup_sum_report(h);
            json j = {{"f", ms_f}, {"H", h.elements()}, {"S", render(s.S, decimal)}, {"tilde_S", render(s.tilde_S, decimal)}};
            if (s.N) j["N"] = render(*s.N, decimal);
            const PiSquared m = mean_square_exact(ms_f, h);
            j["M"] = pi_squared_json(m);
            if (numeric) j["M_numeric"] = mean_square_numeric(ms_f, h, threads);
            out << j.dump() << '\n';
            return 0;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace dsum::cli
