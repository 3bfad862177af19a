#include <doctest.h>

#include <json.hpp>

#include "satlab/verify.hpp"

using namespace satlab;

TEST_CASE("suite registry") {
    const auto& names = suite_names();
    CHECK(names.size() == 9);
    CHECK(std::find(names.begin(), names.end(), "theorem-1.1") != names.end());
    CHECK_THROWS_AS(run_suite("no-such-suite", -1, SearchOptions{}), std::invalid_argument);
}

TEST_CASE("reports are byte-deterministic apart from wall time") {
    SearchOptions opts;
    for (const char* suite : {"table-1", "prop-5.6"}) {
        VerificationReport a = run_suite(suite, 6, opts);
        VerificationReport b = run_suite(suite, 6, opts);
        nlohmann::json ja = nlohmann::json::parse(report_to_json(a));
        nlohmann::json jb = nlohmann::json::parse(report_to_json(b));
        CHECK(ja["cases"] == jb["cases"]);
        CHECK(ja["suite"] == jb["suite"]);
    }
}

TEST_CASE("out-of-range grid points are skipped with the threshold named") {
    VerificationReport r = run_suite("theorem-3.3", 4, SearchOptions{});
    int skipped = 0;
    for (const auto& c : r.cases)
        if (c.status == CaseStatus::skipped_out_of_range) {
            ++skipped;
            CHECK(c.actual.find("threshold") != std::string::npos);
        }
    CHECK(skipped > 0);
    CHECK(r.all_passed());
}

TEST_CASE("report text lists one line per case") {
    VerificationReport r = run_suite("table-1", -1, SearchOptions{});
    std::string text = report_to_text(r);
    CHECK(text.find("suite table-1") != std::string::npos);
    CHECK(text.find("[pass]") != std::string::npos);
    CHECK(text.find("ok (2 cases, 0 failed)") != std::string::npos);
}

TEST_CASE("comparison table shape") {
    std::string tsv = table1_tsv();
    CHECK(tsv.find("\tK1vP3\tK2vP3\tK1vP4\n") == 0);
    CHECK(tsv.find("prior\t") != std::string::npos);
    CHECK(tsv.find("this-work\t") != std::string::npos);
    CHECK(tsv.find("n>=2048") != std::string::npos);
    CHECK(tsv.find("n>=10") != std::string::npos);
}
