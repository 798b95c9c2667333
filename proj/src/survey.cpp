#include "dsum/survey.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include <json.hpp>

#include "dsum/arith.hpp"
#include "dsum/dedekind.hpp"
#include "dsum/primes.hpp"

namespace dsum {

using nlohmann::json;

std::uint64_t element_of_order(std::uint64_t n, std::uint64_t p) {
    if (n == 0 || (p - 1) % n != 0) throw std::invalid_argument("element_of_order: n must divide p - 1");
    if (n == 1) return 1;
    const auto qs = distinct_primes(static_cast<std::int64_t>(n));
    for (std::uint64_t x = 2; x < p; ++x) {
        const std::uint64_t h = powmod(x, (p - 1) / n, p);
        if (std::all_of(qs.begin(), qs.end(), [&](std::uint64_t q) { return powmod(h, n / q, p) != 1; })) return h;
    }
    throw std::logic_error("element_of_order: none found (is p prime?)");
}

SurveyRecord survey_record(std::uint64_t p, std::uint64_t n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("survey_record: n must be odd and >= 3");
    const std::uint64_t h = element_of_order(n, p);
    // sum_{x in H} 12 p s(x, p) = 12 p S
    BigInt twelve_p_S;
    if (p < (std::uint64_t{1} << 41)) {
        __int128 acc = 0;
        std::uint64_t x = 1;
        for (std::uint64_t i = 0; i < n; ++i) {
            acc += dedekind_scaled_i128(x, p);
            x = mulmod(x, h, p);
        }
        twelve_p_S = to_big(acc);
    } else {
        std::uint64_t x = 1;
        for (std::uint64_t i = 0; i < n; ++i) {
            twelve_p_S += dedekind_scaled_big(x, p);
            x = mulmod(x, h, p);
        }
    }
    const BigInt six_p = BigInt(6) * p;
    if (twelve_p_S % six_p != 0)
        throw std::logic_error("survey: 2S(H_n, p) is not an integer at p = " + std::to_string(p));
    SurveyRecord r{p, n, twelve_p_S / six_p, 0, false};
    r.N = BigInt(6) * r.two_S - p;
    if ((r.two_S % 2 != 0) != (((p - 1) / 2) % 2 != 0) || r.N % 2 == 0)
        throw std::logic_error("survey: parity audit failed at p = " + std::to_string(p));
    r.nonpositive = r.N < 0;
    return r;
}

std::string to_string(ScanMode mode) {
    switch (mode) {
        case ScanMode::fixed: return "fixed";
        case ScanMode::window: return "window";
        case ScanMode::all_odd: return "all_odd";
    }
    return "?";
}

ScanMode parse_scan_mode(const std::string& text) {
    if (text == "fixed") return ScanMode::fixed;
    if (text == "window") return ScanMode::window;
    if (text == "all_odd") return ScanMode::all_odd;
    throw std::invalid_argument("unknown scan mode: " + text);
}

std::string DensityReport::rho(int places) const {
    if (c_prime == 0) return "n/a";
    return ExactRational(BigInt(c_leq0), BigInt(c_prime)).decimal(places);
}

namespace {

struct ChunkResult {
    std::uint64_t c_prime = 0, c_leq0 = 0, last_p = 0;
    std::vector<SurveyRecord> records;
};

ChunkResult scan_chunk(const ScanRange& range, std::uint64_t lo, std::uint64_t hi, bool keep_records) {
    ChunkResult out;
    if (range.mode == ScanMode::all_odd) {
        PrimeStream primes(std::max<std::uint64_t>(lo, 3), hi, 2, 1);
        while (auto p = primes.next()) {
            out.last_p = *p;
            std::uint64_t odd = *p - 1;
            while (odd % 2 == 0) odd /= 2;
            for (auto n : divisors(static_cast<std::int64_t>(odd))) {
                ++out.c_prime;
                if (n == 1) {  // N = (2 - 3p)/p < 0
                    ++out.c_leq0;
                    continue;
                }
                SurveyRecord r = survey_record(*p, n);
                out.c_leq0 += r.nonpositive;
                if (keep_records) out.records.push_back(std::move(r));
            }
        }
        return out;
    }
    PrimeStream primes(lo, hi, 2 * range.n, 1);
    while (auto p = primes.next()) {
        out.last_p = *p;
        SurveyRecord r = survey_record(*p, range.n);
        ++out.c_prime;
        out.c_leq0 += r.nonpositive;
        if (keep_records) out.records.push_back(std::move(r));
    }
    return out;
}

void write_atomically(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::trunc);
        if (!os) throw std::runtime_error("cannot write checkpoint " + tmp);
        os << text << '\n';
    }
    std::filesystem::rename(tmp, path);
}

void validate(const ScanRange& range) {
    if (range.mode != ScanMode::all_odd && (range.n < 3 || range.n % 2 == 0))
        throw std::invalid_argument("scan: n must be odd and >= 3");
}

DensityReport run(DensityReport report, const ScanOptions& options) {
    const ScanRange& range = report.range;
    const std::uint64_t hi = range.upper();
    const std::uint64_t chunk = std::max<std::uint64_t>(options.chunk, 1);
    const unsigned threads = std::max(1u, options.threads);
    const bool keep = static_cast<bool>(options.on_record);

    std::uint64_t next = report.covered_to + 1;

    while (!report.complete) {
        if (next > hi) {
            report.complete = true;
            break;
        }
        std::vector<std::pair<std::uint64_t, std::uint64_t>> spans;
        for (unsigned t = 0; t < threads && next <= hi; ++t) {
            const std::uint64_t end = (hi - next < chunk) ? hi : next + chunk - 1;
            spans.emplace_back(next, end);
            next = end + 1;
        }
        std::vector<ChunkResult> results(spans.size());
        if (spans.size() == 1) {
            results[0] = scan_chunk(range, spans[0].first, spans[0].second, keep);
        } else {
            std::vector<std::exception_ptr> errors(spans.size());
            {
                std::vector<std::jthread> pool;
                for (std::size_t i = 0; i < spans.size(); ++i)
                    pool.emplace_back([&, i] {
                        try {
                            results[i] = scan_chunk(range, spans[i].first, spans[i].second, keep);
                        } catch (...) {
                            errors[i] = std::current_exception();
                        }
                    });
            }
            for (auto& e : errors)
                if (e) std::rethrow_exception(e);
        }
        for (auto& r : results) {
            report.c_prime += r.c_prime;
            report.c_leq0 += r.c_leq0;
            if (r.last_p) report.last_p = r.last_p;
            if (keep)
                for (const auto& rec : r.records) options.on_record(rec);
        }
        report.covered_to = spans.back().second;
        report.complete = report.covered_to >= hi;
        if (!options.checkpoint_path.empty()) write_atomically(options.checkpoint_path, checkpoint_json(report));
        if (options.stop_after && report.covered_to >= *options.stop_after) break;
    }
    return report;
}

}  // namespace

DensityReport scan(const ScanRange& range, const ScanOptions& options) {
    validate(range);
    DensityReport report;
    report.range = range;
    report.covered_to = range.lower() == 0 ? 0 : range.lower() - 1;
    return run(report, options);
}

DensityReport scan_fixed_n(std::uint64_t n, std::uint64_t B, const ScanOptions& options) {
    return scan({ScanMode::fixed, n, 0, B}, options);
}

DensityReport scan_window(std::uint64_t n, std::uint64_t A, std::uint64_t span, const ScanOptions& options) {
    return scan({ScanMode::window, n, A, span}, options);
}

DensityReport scan_all_odd_subgroups(std::uint64_t B, const ScanOptions& options) {
    if (B < 3) throw std::invalid_argument("scan_all_odd_subgroups: B must be >= 3");
    return scan({ScanMode::all_odd, 0, 0, B}, options);
}

DensityReport resume(const ScanRange& range, const ScanOptions& options) {
    validate(range);
    std::ifstream is(options.checkpoint_path);
    if (!is) throw std::invalid_argument("resume: cannot read checkpoint " + options.checkpoint_path);
    std::stringstream ss;
    ss << is.rdbuf();
    DensityReport report = parse_checkpoint(ss.str());
    if (!(report.range == range)) throw std::invalid_argument("resume: checkpoint parameters do not match the request");
    if (report.complete) return report;
    return run(report, options);
}

std::string checkpoint_json(const DensityReport& r) {
    json j = {{"n", r.range.n},           {"mode", to_string(r.range.mode)}, {"A", r.range.A},
              {"span_or_B", r.range.span_or_B}, {"last_p", r.last_p},     {"covered_to", r.covered_to},
              {"c_prime", r.c_prime},     {"c_leq0", r.c_leq0}};
    return j.dump();
}

DensityReport parse_checkpoint(const std::string& json_text) {
    const json j = json::parse(json_text);
    DensityReport r;
    r.range = {parse_scan_mode(j.at("mode").get<std::string>()), j.at("n").get<std::uint64_t>(),
               j.at("A").get<std::uint64_t>(), j.at("span_or_B").get<std::uint64_t>()};
    r.last_p = j.at("last_p").get<std::uint64_t>();
    r.covered_to = j.at("covered_to").get<std::uint64_t>();
    r.c_prime = j.at("c_prime").get<std::uint64_t>();
    r.c_leq0 = j.at("c_leq0").get<std::uint64_t>();
    r.complete = r.covered_to >= r.range.upper();
    return r;
}

std::string report_json(const DensityReport& r) {
    json range = {{"mode", to_string(r.range.mode)}};
    if (r.range.mode == ScanMode::window) {
        range["A"] = r.range.A;
        range["span"] = r.range.span_or_B;
    } else {
        range["B"] = r.range.span_or_B;
    }
    json j = {{"n", r.range.n}, {"range", range}, {"c_prime", r.c_prime}, {"c_leq0", r.c_leq0}, {"rho", r.rho(10)}};
    if (!r.complete) j["complete"] = false;
    return j.dump();
}

std::string csv_header() { return "p,n,two_S,N,nonpositive"; }

std::string csv_row(const SurveyRecord& r) {
    std::ostringstream os;
    os << r.p << ',' << r.n << ',' << r.two_S.str() << ',' << r.N.str() << ',' << (r.nonpositive ? 1 : 0);
    return os.str();
}

}  // namespace dsum
