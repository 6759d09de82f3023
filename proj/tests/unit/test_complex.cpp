#include <doctest.h>

#include <memory>

#include "hypcy/complex/examples.hpp"
#include "hypcy/complex/quotient.hpp"
#include "hypcy/complex/subdivision.hpp"
#include "hypcy/homology/homology.hpp"
#include "hypcy/report/properties.hpp"
#include "test_util.hpp"

using namespace hypcy;

namespace {

std::vector<std::string> strings(const std::vector<FgAbGroup>& h) {
    std::vector<std::string> s;
    for (const auto& g : h) s.push_back(g.to_string());
    return s;
}

CellPerm square_perm(std::vector<int> v, std::vector<int> e) {
    CellPerm p;
    p.image = {std::move(v), std::move(e), {-1}};
    return p;
}

// Unit square, vertices 0=(0,0) 1=(1,0) 2=(1,1) 3=(0,1); edges bottom, right, top, left.
std::shared_ptr<RegularComplex> square() {
    return std::make_shared<RegularComplex>(std::vector<std::vector<std::vector<int>>>{
        {{}, {}, {}, {}}, {{0, 1}, {1, 2}, {3, 2}, {0, 3}}, {{0, 1, 2, 3}}});
}

// bottom ~ top reversed and right ~ left reversed
QuotientSpec projective_plane() {
    QuotientSpec q{square(), {}};
    q.gluings.push_back({1, 0, 2, square_perm({2, 3, -1, -1}, {2, -1, -1, -1})});
    q.gluings.push_back({1, 2, 0, square_perm({-1, -1, 0, 1}, {-1, -1, 0, -1})});
    q.gluings.push_back({1, 1, 3, square_perm({-1, 3, 0, -1}, {-1, 3, -1, -1})});
    q.gluings.push_back({1, 3, 1, square_perm({2, -1, -1, 1}, {-1, -1, -1, 1})});
    return q;
}

// bottom ~ top by translation, right ~ left reversed
QuotientSpec klein_bottle() {
    QuotientSpec q{square(), {}};
    q.gluings.push_back({1, 0, 2, square_perm({3, 2, -1, -1}, {2, -1, -1, -1})});
    q.gluings.push_back({1, 2, 0, square_perm({-1, -1, 1, 0}, {-1, -1, 0, -1})});
    q.gluings.push_back({1, 1, 3, square_perm({-1, 3, 0, -1}, {-1, 3, -1, -1})});
    q.gluings.push_back({1, 3, 1, square_perm({2, -1, -1, 1}, {-1, -1, -1, 1})});
    return q;
}

std::vector<std::vector<int>> simplex_boundary(int n) {
    std::vector<std::vector<int>> facets;
    for (int skip = 0; skip <= n; ++skip) {
        std::vector<int> f;
        for (int v = 0; v <= n; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(f);
    }
    return facets;
}

}  // namespace

TEST_SUITE("complex") {

TEST_CASE("regular complex orientation gives dd = 0") {
    RegularComplex sq = *square();
    CwComplex c = sq.cw();
    CHECK(c.counts == std::vector<int>{4, 4, 1});
    CHECK(c.boundary_squares_to_zero());
    CHECK(strings(homology(c)) == std::vector<std::string>{"Z", "0", "0"});
    // edge {3,2} runs from vertex 2 to vertex 3
    CHECK(sq.incidence(1, 2, 3) == 1);
    CHECK(sq.incidence(1, 2, 2) == -1);
}

TEST_CASE("simplicial spheres") {
    for (int n = 1; n <= 4; ++n) {
        RegularComplex X = simplicial_complex(simplex_boundary(n + 1));
        std::vector<std::string> want(static_cast<std::size_t>(n + 1), "0");
        want.front() = "Z";
        want.back() = "Z";
        CHECK(strings(homology(X.cw())) == want);
    }
    CHECK_THROWS_AS(simplicial_complex({}), std::invalid_argument);
}

TEST_CASE("torus from a glued square") {
    QuotientComplex q = quotient_complex(torus_square());
    CHECK(q.orbit_counts() == std::vector<int>{1, 2, 1});
    CHECK(strings(homology(q.cw())) == std::vector<std::string>{"Z", "Z^2", "Z"});
    CHECK(q.cw().boundary_squares_to_zero());
}

TEST_CASE("projective plane and Klein bottle carry torsion") {
    QuotientComplex rp2 = quotient_complex(projective_plane());
    CHECK(rp2.orbit_counts() == std::vector<int>{2, 2, 1});
    CHECK(strings(homology(rp2.cw())) == std::vector<std::string>{"Z", "Z/2", "0"});
    CHECK(homology_mod2(rp2.cw()) == std::vector<int>{1, 1, 1});
    CHECK(strings(homology(subdivided_quotient(rp2).cw)) == std::vector<std::string>{"Z", "Z/2", "0"});

    QuotientComplex kb = quotient_complex(klein_bottle());
    CHECK(kb.orbit_counts() == std::vector<int>{1, 2, 1});
    CHECK(strings(homology(kb.cw())) == std::vector<std::string>{"Z", "Z + Z/2", "0"});
    CHECK(homology_mod2(kb.cw()) == std::vector<int>{1, 2, 1});
    CHECK(strings(homology(subdivided_quotient(kb).cw)) == std::vector<std::string>{"Z", "Z + Z/2", "0"});
}

TEST_CASE("gluing errors are reported") {
    QuotientSpec q = torus_square();
    q.gluings.pop_back();  // no inverse for the last gluing
    CHECK_THROWS(quotient_complex(q));
    // an edge glued to itself with its ends swapped
    QuotientSpec flip{square(), {}};
    flip.gluings.push_back({1, 0, 0, square_perm({1, 0, -1, -1}, {0, -1, -1, -1})});
    CHECK_THROWS(quotient_complex(flip));
}

TEST_CASE("double of a polygon") {
    RegularComplex tri = simplicial_complex({{0, 1, 2}});
    CwComplex d = double_polytope(tri);
    CHECK(strings(homology(d)) == std::vector<std::string>{"Z", "0", "Z"});
    CHECK(euler_characteristic(d) == 2);
    CHECK(d.labels.at("singular").size() == 3);
}

TEST_CASE("barycentric subdivision counts") {
    RegularComplex circle = simplicial_complex({{0, 1}, {1, 2}, {0, 2}});
    FlagComplex sd = barycentric_subdivision(circle);
    CHECK(sd.cw.counts == std::vector<int>{6, 6});
    // sd of a 2-simplex: 7 vertices, 12 edges, 6 triangles
    FlagComplex sd2 = barycentric_subdivision(simplicial_complex({{0, 1, 2}}));
    CHECK(sd2.cw.counts == std::vector<int>{7, 12, 6});
    CHECK(strings(homology(sd2.cw)) == std::vector<std::string>{"Z", "0", "0"});
}

TEST_CASE("torus grid translations") {
    auto X = std::make_shared<RegularComplex>(torus_grid(3));
    CHECK(X->cw().counts == std::vector<int>{9, 18, 9});
    QuotientComplex q = quotient_complex({X, {}});
    CHECK(strings(homology(q.cw())) == std::vector<std::string>{"Z", "Z^2", "Z"});
    CellPerm t = torus_translation(3, 1, 0);
    CHECK(check_cell_morphism(*X, t));
    FixedStrataReport fs = fixed_strata(q, t);
    CHECK(fs.order == 3);
    CHECK(fs.isolated_total() == 0);
    CHECK(induced_map(q, t).order() == 3);
    CHECK_THROWS(torus_grid(2));
}

TEST_CASE("vertex permutations of a simplex boundary") {
    auto X = std::make_shared<RegularComplex>(simplicial_complex(simplex_boundary(3)));
    QuotientComplex q = quotient_complex({X, {}});
    CellPerm swap01 = vertex_permutation_map(*X, {1, 0, 2, 3});
    CellMap f = induced_map(q, swap01);
    CHECK(f.is_chain_map());
    CHECK(induced_on_homology(f, 2)(0, 0) == -1);
    CHECK(f.compose(f).is_identity());
    // the 3-cycle on 0,1,2 fixes vertex 3
    FixedStrataReport fs = fixed_strata(q, vertex_permutation_map(*X, {1, 2, 0, 3}));
    CHECK(fs.order == 3);
    CHECK(fs.setwise.at(0) == 1);
    CHECK_THROWS(vertex_permutation_map(*X, {1, 0, 2}));
}

TEST_CASE("property: dd = 0 and subdivision invariance") {
    RandomSource r(test::kSeed + 30);
    CHECK(boundary_squared_zero(r, 500).failures == 0);
    CHECK(subdivision_homology(r, 200).failures == 0);
    CHECK(chain_map_functoriality(r, 300).failures == 0);
}

}  // TEST_SUITE
