#include <doctest.h>

#include "hypcy/report/pipelines.hpp"
#include "hypcy/report/selftest.hpp"
#include "test_util.hpp"

using namespace hypcy;

namespace {

bool has_valid_statuses(const nlohmann::json& j) {
    for (const auto& c : j["checks"]) {
        const std::string s = c["status"], p = c["provenance"];
        if (s != "pass" && s != "fail" && s != "skip") return false;
        if (p != "PAPER" && p != "TRIVIAL" && p != "DERIVED") return false;
        if (s == "fail" && !c.contains("witness")) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("checks and witnesses") {
    Report r("demo");
    r.expect("equal", 3, 3, Provenance::Trivial);
    r.expect("different", 3, 4, Provenance::Derived);
    r.require("custom witness", false, "ok", "bad", Provenance::Paper, {{"why", "here"}});
    r.skip("later", "not applicable", Provenance::Derived);
    r.error("boom", "division by zero", Provenance::Derived);
    CHECK(r.passed() == 1);
    CHECK(r.failed() == 3);
    CHECK_FALSE(r.ok());

    nlohmann::json j = r.to_json();
    CHECK(j["tool"] == "hypcy");
    CHECK(j["version"] == HYPCY_VERSION);
    CHECK(j["command"] == "demo");
    CHECK_FALSE(j.contains("results"));
    CHECK_FALSE(j["checks"][0].contains("witness"));
    CHECK(j["checks"][1]["witness"]["command"] == "demo");
    CHECK(j["checks"][1]["witness"]["actual"] == 4);
    CHECK(j["checks"][2]["witness"]["why"] == "here");
    CHECK(j["checks"][3]["status"] == "skip");
    CHECK(j["checks"][4]["witness"]["exception"] == "division by zero");
    CHECK(has_valid_statuses(j));

    std::string text = r.to_text();
    CHECK(text.find("[fail] different (DERIVED): expected 3, got 4") != std::string::npos);
    CHECK(text.find("demo: 1 passed, 3 failed, 1 skipped") != std::string::npos);
}

TEST_CASE("status and provenance strings") {
    CHECK(to_string(CheckStatus::Pass) == "pass");
    CHECK(to_string(CheckStatus::Fail) == "fail");
    CHECK(to_string(CheckStatus::Skip) == "skip");
    CHECK(to_string(Provenance::Paper) == "PAPER");
    CHECK(to_string(Provenance::Trivial) == "TRIVIAL");
    CHECK(to_string(Provenance::Derived) == "DERIVED");
}

TEST_CASE("merging and serialization") {
    Report a("a"), b("b");
    b.expect("x", 1, 1, Provenance::Trivial);
    b.results["k"] = 2;
    a.merge(b, "sub");
    CHECK(a.checks.size() == 1);
    CHECK(a.checks[0].name == "sub/x");
    CHECK(a.results.empty());
    CHECK(a.dump().back() == '\n');
    // keys are sorted
    std::string s = b.dump();
    CHECK(s.find("\"checks\"") < s.find("\"command\""));
    CHECK(s.find("\"results\"") < s.find("\"tool\""));
}

TEST_CASE("pipeline reports are deterministic and well formed") {
    std::vector<Report> reports = {lie_decompose_report(2), lie_forms_report(3), twistor_report(4),
                                   resolution_check_report(), lift_order_report(5), orbifold_mv_report(),
                                   knot_threefold_report()};
    for (const auto& r : reports) {
        CHECK_MESSAGE(r.ok(), r.to_text());
        CHECK(has_valid_statuses(r.to_json()));
    }
    CHECK(lie_decompose_report(2).dump() == reports[0].dump());
    PipelineOptions o;
    CHECK(fixed_locus_report(6, o).dump() == fixed_locus_report(6, o).dump());
    CHECK(fixed_locus_report(6, o).ok());
}

TEST_CASE("a wall mismatch is reported, not failed") {
    WallData d = WallData::model(2, 1);
    d.p1_pairing[0] = 3;
    Report r = wall_match_report(d);
    CHECK(r.ok());
    CHECK(r.results.dump().find("no match") != std::string::npos);
}

TEST_CASE("acceptance run bookkeeping") {
    AcceptanceRun run;
    for (int id = 1; id <= 11; ++id) {
        Criterion c;
        c.id = id;
        c.title = "t" + std::to_string(id);
        c.report.command = "selftest";
        c.report.expect("check", id, id, Provenance::Trivial);
        run.criteria.push_back(c);
    }
    CHECK(run.passed());
    Report all = run.combined();
    CHECK(all.checks.size() == 11);
    CHECK(all.checks[0].name == "c01/check");
    CHECK(all.checks[10].name == "c11/check");
    CHECK(all.results["criteria"].size() == 11);
    CHECK(run.criteria[3].line().find("criterion  4 PASS  t4 (1/1 checks") == 0);

    run.criteria[5].report.expect("broken", 1, 2, Provenance::Derived);
    CHECK_FALSE(run.criteria[5].passed());
    CHECK_FALSE(run.passed());
    run.criteria.pop_back();
    run.criteria[5].report.checks.pop_back();
    CHECK_FALSE(run.passed());  // only ten criteria

    Criterion empty;
    CHECK_FALSE(empty.passed());
}

}  // TEST_SUITE
