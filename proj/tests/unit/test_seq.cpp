#include <doctest.h>

#include <fstream>
#include <numeric>

#include "hypcy/seq/models.hpp"
#include "test_util.hpp"

using namespace hypcy;

namespace {

std::vector<std::string> strings(const GradedGroups& h) {
    std::vector<std::string> s;
    for (const auto& g : h) s.push_back(g.to_string());
    return s;
}

nlohmann::json load(const std::string& name) {
    std::ifstream in(std::string(HYPCY_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

SeqNode known(const std::string& name, FgAbGroup g) { return {name, std::move(g)}; }
SeqNode unknown(const std::string& name) { return {name, std::nullopt}; }

}  // namespace

TEST_SUITE("seq") {

TEST_CASE("resolved threefold from a knot") {
    ModelHomology h = knot_threefold_homology();
    CHECK(h.ok());
    CHECK(strings(h.homology) == std::vector<std::string>{"Z", "0", "Z", "Z^4", "Z", "0", "Z"});
    for (const auto& d : h.result.log) {
        CHECK_FALSE(d.rule.empty());
        CHECK_FALSE(d.inputs.empty());
    }
    SolveResult bare = solve(knot_threefold_problem(2, false));
    CHECK(bare.status == SolveResult::Status::Underdetermined);
    CHECK_FALSE(bare.residual.empty());
    CHECK_FALSE(bare.group(knot_threefold_problem(2, false), "H2").has_value());
    CHECK_THROWS(knot_threefold_problem(3));
}

TEST_CASE("the exported problem file solves the same way") {
    SequenceProblem p = SequenceProblem::from_json(load("knot_threefold_problem.json"));
    SolveResult r = solve(p);
    CHECK(r.status == SolveResult::Status::Solved);
    CHECK(r.group(p, "H3") == FgAbGroup::free(4));
    CHECK(r.group(p, "H2") == FgAbGroup::free(1));

    SequenceProblem s = SequenceProblem::from_json(load("split_extension_problem.json"));
    SolveResult rs = solve(s);
    CHECK(rs.status == SolveResult::Status::Solved);
    CHECK(rs.group(s, "H3X") == FgAbGroup::free(3));
}

TEST_CASE("orbifold Mayer-Vietoris and the relative groups") {
    ModelHomology mv = orbifold_homology_mv();
    CHECK(mv.ok());
    CHECK(strings(mv.homology) == std::vector<std::string>{"Z", "0", "0", "Z^2", "0", "0", "Z"});
    ModelHomology rel = orbifold_relative_homology();
    CHECK(rel.ok());
    CHECK(strings(rel.homology) == std::vector<std::string>{"0", "0", "Z^2", "Z^3", "0", "0", "Z"});
    ModelHomology balls = two_balls_homology();
    CHECK(balls.ok());
    CHECK(strings(balls.homology) == std::vector<std::string>{"Z", "0", "0", "Z"});
}

TEST_CASE("contradictions carry a witness") {
    SequenceProblem p;
    p.nodes = {known("a", FgAbGroup{}), known("b", FgAbGroup::free(1)), known("c", FgAbGroup{})};
    p.arrows = {{}, {}};
    SolveResult r = solve(p);
    CHECK(r.status == SolveResult::Status::Contradiction);
    CHECK_FALSE(r.witness.empty());
    CHECK(to_string(r.status) == "contradiction");
}

TEST_CASE("torsion is never guessed") {
    // 0 -> Z -> ? -> Z/2 -> 0 has two consistent answers, Z and Z + Z/2
    SequenceProblem p;
    p.nodes = {known("a", FgAbGroup{}), known("b", FgAbGroup::free(1)), unknown("X"),
               known("d", FgAbGroup{0, {2}}), known("e", FgAbGroup{})};
    p.arrows.resize(4);
    SolveResult r = solve(p);
    CHECK(r.status == SolveResult::Status::Underdetermined);
    CHECK_FALSE(r.group(p, "X").has_value());
}

TEST_CASE("problem JSON round trip and validation") {
    SequenceProblem p = knot_threefold_problem();
    nlohmann::json j = p.to_json();
    CHECK(SequenceProblem::from_json(j).to_json() == j);
    CHECK(p.index_of("H3") >= 0);
    CHECK(p.index_of("nope") == -1);

    SequenceProblem bad = p;
    bad.arrows.pop_back();
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK_THROWS(SequenceProblem::from_json(nlohmann::json::parse(R"({"nodes": 3})")));
}

TEST_CASE("property: solver never contradicts a free exact sequence") {
    // build 0 -> N_1 -> ... -> N_L -> 0 from random image ranks, hide one node
    std::mt19937_64 rng(test::kSeed + 70);
    int solved = 0;
    const int cases = 400;
    for (int t = 0; t < cases; ++t) {
        const int len = 3 + static_cast<int>(rng() % 5);
        std::vector<int> im(static_cast<std::size_t>(len + 1), 0);  // im[i] = rank of image into node i
        for (int i = 1; i < len; ++i) im[i] = static_cast<int>(rng() % 4);
        SequenceProblem p;
        p.nodes.push_back(known("z0", FgAbGroup{}));
        for (int i = 0; i < len; ++i)
            p.nodes.push_back(known("N" + std::to_string(i), FgAbGroup::free(im[i] + im[i + 1])));
        p.nodes.push_back(known("z1", FgAbGroup{}));
        p.arrows.resize(p.nodes.size() - 1);
        for (int i = 0; i + 1 < len; ++i)
            if (rng() % 2) p.arrows[i + 1].rank = im[i + 1];
        const int hidden = 1 + static_cast<int>(rng() % static_cast<unsigned>(len));
        const FgAbGroup truth = *p.nodes[hidden].known;
        p.nodes[hidden].known.reset();

        SolveResult r = solve(p);
        REQUIRE(r.status != SolveResult::Status::Contradiction);
        if (r.groups[hidden]) {
            REQUIRE(*r.groups[hidden] == truth);
            ++solved;
        }
    }
    CHECK(solved > 0);
}

TEST_CASE("property: solver never contradicts a coefficient sequence with torsion") {
    // ... -> H_k -(m)-> H_k -> H_k(Z/m) -> H_{k-1} -> ..., groups from universal coefficients
    std::mt19937_64 rng(test::kSeed + 71);
    auto mod = [](const FgAbGroup& g, long m) {  // g (x) Z/m
        std::vector<long> t(static_cast<std::size_t>(g.rank), m);
        for (long d : g.torsion) t.push_back(std::gcd(d, m));
        return FgAbGroup::from_cyclic(0, t);
    };
    auto tor = [](const FgAbGroup& g, long m) {
        std::vector<long> t;
        for (long d : g.torsion) t.push_back(std::gcd(d, m));
        return FgAbGroup::from_cyclic(0, t);
    };
    int solved = 0;
    const int cases = 300;
    for (int t = 0; t < cases; ++t) {
        const long m = 2 + static_cast<long>(rng() % 4);
        const int top = 1 + static_cast<int>(rng() % 3);
        std::vector<FgAbGroup> H;
        for (int k = 0; k <= top; ++k) {
            std::vector<long> tors;
            for (int i = static_cast<int>(rng() % 3); i > 0; --i) tors.push_back(2 + static_cast<long>(rng() % 5));
            H.push_back(FgAbGroup::from_cyclic(static_cast<int>(rng() % 3), tors));
        }
        SequenceProblem p;
        p.nodes.push_back(known("zero", FgAbGroup{}));
        p.nodes.push_back(known("Hm" + std::to_string(top + 1), tor(H[top], m)));
        for (int k = top; k >= 0; --k) {
            p.nodes.push_back(known("H" + std::to_string(k) + "a", H[k]));
            p.nodes.push_back(known("H" + std::to_string(k) + "b", H[k]));
            std::vector<long> hm = mod(H[k], m).torsion;
            if (k > 0)
                for (long d : tor(H[k - 1], m).torsion) hm.push_back(d);
            p.nodes.push_back(known("Hm" + std::to_string(k), FgAbGroup::from_cyclic(0, hm)));
        }
        p.nodes.push_back(known("end", FgAbGroup{}));
        p.arrows.resize(p.nodes.size() - 1);
        const int hidden = 1 + static_cast<int>(rng() % (p.nodes.size() - 2));
        const FgAbGroup truth = *p.nodes[hidden].known;
        p.nodes[hidden].known.reset();

        SolveResult r = solve(p);
        REQUIRE_MESSAGE(r.status != SolveResult::Status::Contradiction, r.witness);
        if (r.groups[hidden]) {
            REQUIRE(*r.groups[hidden] == truth);
            ++solved;
        }
    }
    CHECK(solved > 0);
}

TEST_CASE("Leray-Hirsch module") {
    GradedGroups base = {FgAbGroup::free(1), FgAbGroup{}, FgAbGroup::free(1)};
    CHECK(strings(leray_hirsch_module(base)) == std::vector<std::string>{"Z", "0", "Z^2", "0", "Z"});
    CHECK(strings(leray_hirsch_module({FgAbGroup::free(1), FgAbGroup{0, {2}}}, 1)) ==
          std::vector<std::string>{"Z", "Z + Z/2", "Z/2"});
}

TEST_CASE("wall classification matching") {
    WallMatch m = wall_match(WallData::model(2, 1));
    CHECK(m.hypotheses_met);
    CHECK(m.matched);
    CHECK(m.a == 2);
    CHECK(m.b == 1);
    CHECK(m.name == connected_sum_name(2, 1));

    WallMatch file = wall_match(WallData::from_json(load("wall_resolution.json")));
    CHECK(file.matched);
    CHECK(file.a == 2);

    WallMatch off = wall_match(WallData::from_json(load("wall_perturbed_p1.json")));
    CHECK(off.hypotheses_met);
    CHECK_FALSE(off.matched);
    CHECK(off.name == "no match");

    WallData nonspin = WallData::model(1, 1);
    nonspin.spin = false;
    CHECK_FALSE(wall_match(nonspin).hypotheses_met);

    WallData broken = WallData::model(1, 2);
    broken.cubic_form.pop_back();
    CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
    CHECK(WallData::from_json(WallData::model(3, 2).to_json()).to_json() == WallData::model(3, 2).to_json());
}

}  // TEST_SUITE
