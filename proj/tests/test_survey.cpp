#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "dsum/arith.hpp"
#include "dsum/mean_square.hpp"
#include "dsum/survey.hpp"
#include "oracles.hpp"

using namespace dsum;
namespace fs = std::filesystem;

namespace {

struct TempFile {
    fs::path path;
    explicit TempFile(const std::string& name) : path(fs::temp_directory_path() / name) { fs::remove(path); }
    ~TempFile() { fs::remove(path); }
};

}  // namespace

TEST_CASE("survey records match the sawtooth oracle") {
    for (std::uint64_t n : {3u, 5u, 9u}) {
        for (std::uint64_t p = 2 * n + 1; p < 600; p += 2 * n) {
            if (!oracle::trial_prime(p)) continue;
            const auto rec = survey_record(p, n);
            const auto ref = oracle::n_value(p, oracle::cyclic_subgroup(n, p));
            REQUIRE(denominator(ref) == 1);
            REQUIRE(rec.N == numerator(ref));
            REQUIRE(rec.N == 6 * rec.two_S - p);
            REQUIRE(rec.nonpositive == (rec.N < 0));
            REQUIRE(abs(rec.N) % 2 == 1);
            REQUIRE((rec.two_S - (p - 1) / 2) % 2 == 0);
        }
    }
    CHECK_THROWS_AS(survey_record(19, 4), std::invalid_argument);
    CHECK_THROWS_AS(survey_record(19, 5), std::invalid_argument);
}

TEST_CASE("survey subgroup is the unique subgroup of order n") {
    for (std::uint64_t p = 19; p < 3000; p += 18)
        if (is_prime(p)) REQUIRE(Subgroup::generated_by(p, {element_of_order(9, p)}) == subgroup_of_order(9, p));
}

TEST_CASE("density tables at 10^5") {
    const std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::string>> rows = {
        {5, 2387, 1335, "0.55927"}, {7, 1593, 823, "0.51663"}, {9, 1592, 838, "0.52638"},
        {11, 945, 506, "0.53544"},  {13, 798, 397, "0.49749"}, {15, 1189, 648, "0.54499"}};
    for (const auto& [n, cp, c0, rho] : rows) {
        const auto r = scan_fixed_n(n, 100000);
        CHECK(r.c_prime == cp);
        CHECK(r.c_leq0 == c0);
        CHECK(r.rho() == rho);
        CHECK(r.complete);
    }
}

TEST_CASE("further rho_9 rows") {
    const auto r = scan_fixed_n(9, 10000000);
    CHECK(r.c_prime == 110772);
    CHECK(r.c_leq0 == 56779);
    CHECK(r.rho() == "0.51257");
    const std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t, std::string>> windows = {
        {10000000000ULL, 1000000, 7226, 3695, "0.51134"},     {10000000000ULL, 10000000, 72505, 36731, "0.50659"},
        {100000000000ULL, 1000000, 6558, 3301, "0.50335"},    {100000000000ULL, 10000000, 65747, 33253, "0.50577"},
        {1000000000000ULL, 1000000, 6076, 3145, "0.51761"}};
    for (const auto& [A, span, cp, c0, rho] : windows) {
        const auto w = scan_window(9, A, span);
        CHECK(w.c_prime == cp);
        CHECK(w.c_leq0 == c0);
        CHECK(w.rho() == rho);
    }
}

TEST_CASE("window scans") {
    const auto w = scan_window(9, 0, 100000);
    const auto f = scan_fixed_n(9, 100000);
    CHECK(w.c_prime == f.c_prime);
    CHECK(w.c_leq0 == f.c_leq0);
    // Inclusive bounds: 19 is the first prime = 1 mod 18.
    CHECK(scan_window(9, 19, 0).c_prime == 1);
    CHECK(scan_window(9, 20, 16).c_prime == 0);
    CHECK(scan_window(9, 0, 37).c_prime == 2);
}

TEST_CASE("all odd subgroups") {
    auto r = scan_all_odd_subgroups(7);
    CHECK(r.c_prime == 4);
    CHECK(r.c_leq0 == 4);
    // Adds (11,1), (11,5), (13,1), (13,3).
    r = scan_all_odd_subgroups(13);
    CHECK(r.c_prime == 8);
    CHECK(r.c_leq0 == 8);
    // (31, 5) has N = 35 > 0.
    CHECK(survey_record(31, 5).N == 35);
    r = scan_all_odd_subgroups(31);
    CHECK(r.c_leq0 < r.c_prime);

    // Direct count of pairs with the oracle.
    std::uint64_t pairs = 0, nonpos = 0;
    for (std::uint64_t p = 3; p <= 500; ++p) {
        if (!oracle::trial_prime(p)) continue;
        for (std::uint64_t n = 1; n < p; n += 2) {
            if ((p - 1) % n) continue;
            ++pairs;
            if (oracle::n_value(p, oracle::cyclic_subgroup(n, p)) <= 0) ++nonpos;
        }
    }
    r = scan_all_odd_subgroups(500);
    CHECK(r.c_prime == pairs);
    CHECK(r.c_leq0 == nonpos);
    CHECK_THROWS(scan_all_odd_subgroups(2));
}

TEST_CASE("results do not depend on threads or chunking") {
    ScanOptions one;
    ScanOptions many;
    many.threads = 4;
    many.chunk = 7919;
    for (std::uint64_t n : {5u, 9u}) {
        const auto a = scan_fixed_n(n, 200000, one);
        const auto b = scan_fixed_n(n, 200000, many);
        CHECK(a.c_prime == b.c_prime);
        CHECK(a.c_leq0 == b.c_leq0);
        CHECK(report_json(a) == report_json(b));
    }
    const auto a = scan_all_odd_subgroups(20000, one);
    const auto b = scan_all_odd_subgroups(20000, many);
    CHECK(report_json(a) == report_json(b));
}

TEST_CASE("record stream is ascending and consistent with the counts") {
    ScanOptions opt;
    opt.threads = 3;
    opt.chunk = 5000;
    std::vector<SurveyRecord> recs;
    opt.on_record = [&](const SurveyRecord& r) { recs.push_back(r); };
    const auto rep = scan_fixed_n(9, 50000, opt);
    REQUIRE(recs.size() == rep.c_prime);
    std::uint64_t neg = 0;
    for (std::size_t i = 0; i < recs.size(); ++i) {
        if (i) REQUIRE(recs[i - 1].p < recs[i].p);
        neg += recs[i].nonpositive;
    }
    CHECK(neg == rep.c_leq0);
    CHECK(csv_header() == "p,n,two_S,N,nonpositive");
    CHECK(csv_row(survey_record(19, 9)).rfind("19,9,", 0) == 0);
}

TEST_CASE("checkpoint serialization round trip") {
    DensityReport r;
    r.range = {ScanMode::window, 9, 10000000000ULL, 1000000};
    r.c_prime = 17;
    r.c_leq0 = 9;
    r.last_p = 10000012345ULL;
    r.covered_to = 10000020000ULL;
    const auto back = parse_checkpoint(checkpoint_json(r));
    CHECK(back.range == r.range);
    CHECK(back.c_prime == 17);
    CHECK(back.c_leq0 == 9);
    CHECK(back.last_p == r.last_p);
    CHECK(back.covered_to == r.covered_to);

    const auto j = nlohmann::json::parse(report_json(scan_fixed_n(9, 100000)));
    CHECK(j.at("n") == 9);
    CHECK(j.at("c_prime") == 1592);
    CHECK(j.at("c_leq0") == 838);
    CHECK(j.at("rho").get<std::string>().rfind("0.52638", 0) == 0);
    CHECK(parse_scan_mode(to_string(ScanMode::all_odd)) == ScanMode::all_odd);
    CHECK_THROWS(parse_scan_mode("sideways"));
}

TEST_CASE("interrupted scan resumes to the same totals") {
    TempFile cp("dsum_test_checkpoint.json");
    ScanOptions opt;
    opt.chunk = 10000;
    opt.checkpoint_path = cp.path.string();
    opt.stop_after = 50000;
    const ScanRange range{ScanMode::fixed, 9, 0, 100000};
    const auto partial = scan(range, opt);
    CHECK_FALSE(partial.complete);
    CHECK(partial.c_prime < 1592);
    REQUIRE(fs::exists(cp.path));

    opt.stop_after.reset();
    const auto done = resume(range, opt);
    CHECK(done.complete);
    CHECK(done.c_prime == 1592);
    CHECK(done.c_leq0 == 838);

    // Completed checkpoint: immediate final report.
    const auto again = resume(range, opt);
    CHECK(again.c_prime == 1592);
    CHECK(again.c_leq0 == 838);

    const ScanRange wrong{ScanMode::fixed, 7, 0, 100000};
    CHECK_THROWS_AS(resume(wrong, opt), std::invalid_argument);

    ScanOptions missing;
    missing.checkpoint_path = (fs::temp_directory_path() / "dsum_no_such_checkpoint.json").string();
    CHECK_THROWS_AS(resume(range, missing), std::invalid_argument);
}
