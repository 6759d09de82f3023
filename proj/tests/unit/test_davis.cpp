#include <doctest.h>

#include "hypcy/davis/davis.hpp"
#include "test_util.hpp"

using namespace hypcy;

namespace {

const DavisModel& model() {
    static const DavisModel m = build_davis_model();
    return m;
}

const DavisReport& report() {
    static const DavisReport r = run_davis_pipeline(model());
    return r;
}

std::vector<std::string> strings(const std::vector<FgAbGroup>& h) {
    std::vector<std::string> s;
    for (const auto& g : h) s.push_back(g.to_string());
    return s;
}

GradedAction scalar_action(const std::vector<int>& dims, const std::vector<int>& sign) {
    GradedAction a;
    a.dims = dims;
    for (std::size_t k = 0; k < dims.size(); ++k) a.action.push_back(QMatrix::identity(dims[k]).scaled(sign[k]));
    return a;
}

}  // namespace

TEST_SUITE("davis") {

TEST_CASE("quotient cell structure") {
    const DavisReport& r = report();
    CHECK(r.pairs == 60);
    CHECK(r.adjacent_facet_pairs == 720);
    CHECK(r.orbit_counts == std::vector<int>{1, 60, 144, 60, 1});
    // Euler characteristic straight from the orbit counts
    int alt = 0;
    for (std::size_t k = 0; k < r.orbit_counts.size(); ++k) alt += (k % 2 ? -1 : 1) * r.orbit_counts[k];
    CHECK(alt == r.chi);
    CHECK(r.chi == 26);
}

TEST_CASE("integral homology of M") {
    const DavisReport& r = report();
    CHECK(strings(r.homology) == std::vector<std::string>{"Z", "Z^24", "Z^72", "Z^24", "Z"});
    CHECK(r.homology_mod2 == std::vector<int>{1, 24, 72, 24, 1});
    // the flag subdivision is a different cell structure on the same space
    CHECK(r.subdivision_homology == r.homology);
    CHECK(r.subdivision_counts.front() == 266);
    CHECK(r.loop_quotient == FgAbGroup::free(24));
}

TEST_CASE("the involution and its fixed points") {
    const DavisReport& r = report();
    CHECK(r.sigma_order == 2);
    CHECK(r.fixed_points.isolated == std::vector<int>{1, 60, 0, 60, 1});
    CHECK(r.fixed_points.isolated_total() == 122);
    CHECK(r.fixed_points.finite_fixed_set());
    CHECK(r.sigma_minus_identity_on_h1);
    CHECK(r.sigma_traces == std::vector<int>{1, -24, 72, -24, 1});
    // Lefschetz: isolated fixed points of an orientation preserving involution each count +1
    CHECK(r.lefschetz_cellular == r.lefschetz_homological);
    CHECK(r.lefschetz_homological == r.fixed_points.isolated_total());
}

TEST_CASE("homology of the quotient M/sigma") {
    const DavisReport& r = report();
    std::vector<std::string> h = strings(r.quotient_homology);
    REQUIRE(h.size() == 5);
    CHECK(h[0] == "Z");
    CHECK(h[1] == "0");
    CHECK(r.quotient_homology[2].rank == 72);
    CHECK(r.quotient_homology[2].torsion == std::vector<long>(25, 2));
    CHECK(h[3] == "0");
    CHECK(h[4] == "Z");
    CHECK(r.quotient_h1.is_trivial());
    // rational Euler characteristic of the quotient: (chi(M) + L(sigma)) / 2
    CHECK(1 + 72 + 1 == (r.chi + r.lefschetz_homological) / 2);
}

TEST_CASE("b3 of the resolution and the Kahler test") {
    const DavisReport& r = report();
    CHECK(r.b3_hat == 0);
    CHECK(r.verdict == KahlerVerdict::Obstructed);
    CHECK(to_string(r.verdict) == "no Kahler structure with c1=0");
}

TEST_CASE("b3_of_resolution on synthetic actions") {
    std::vector<int> dims{1, 2, 4, 2, 1};
    CHECK(b3_of_resolution(scalar_action(dims, {1, -1, 1, -1, 1})) == 0);
    CHECK(b3_of_resolution(scalar_action(dims, {1, 1, 1, 1, 1})) == 4);
    CHECK(b3_of_resolution(scalar_action(dims, {1, 1, 1, -1, 1})) == 2);
    CHECK(b3_of_resolution(scalar_action(dims, {1, -1, 1, -1, 1}), {1, 3, 1}) == 3);
    // a swap has a one dimensional invariant line
    GradedAction swap = scalar_action({1, 2, 0, 0, 1}, {1, 1, 1, 1, 1});
    swap.action[1] = QMatrix::from_columns(2, {{0, 1}, {1, 0}});
    CHECK(b3_of_resolution(swap) == 1);

    GradedAction bad = scalar_action(dims, {1, 1, 1, 1, 1});
    bad.action[2] = QMatrix::identity(3);
    CHECK_THROWS_AS(b3_of_resolution(bad), std::invalid_argument);
    CHECK_THROWS_AS(b3_of_resolution(scalar_action({1, 0, 1}, {1, 1, 1})), std::invalid_argument);
}

TEST_CASE("Kahler obstruction table") {
    CHECK(kahler_obstruction(0, 0) == KahlerVerdict::Obstructed);
    CHECK(kahler_obstruction(0, 1) == KahlerVerdict::Obstructed);
    CHECK(kahler_obstruction(0, 2) == KahlerVerdict::Inconclusive);
    CHECK(kahler_obstruction(2, 0) == KahlerVerdict::Inconclusive);
}

TEST_CASE("report JSON is stable") {
    nlohmann::json a = report().to_json();
    nlohmann::json b = run_davis_pipeline(model()).to_json();
    CHECK(a.dump() == b.dump());
    CHECK(a["fixed_points"]["total"] == 122);
}

}  // TEST_SUITE
