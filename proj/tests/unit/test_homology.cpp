#include <doctest.h>

#include "hypcy/homology/homology.hpp"
#include "hypcy/homology/snf.hpp"
#include "hypcy/report/properties.hpp"
#include "test_util.hpp"

using namespace hypcy;

namespace {

std::vector<long> diag(const IntMatrix& d) {
    std::vector<long> out;
    for (int i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d.get(i, i).get_si());
    return out;
}

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("textbook Smith normal form") {
    IntMatrix a = IntMatrix::from_dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    SnfResult s = smith_normal_form(a);
    CHECK(diag(s.D) == std::vector<long>{2, 6, 12});
    CHECK(s.U * a * s.V == s.D);
    CHECK(invariant_factors(a) == std::vector<Integer>{2, 6, 12});
    CHECK(rank_mod2(a) == 0);
}

TEST_CASE("rank deficient and rectangular inputs") {
    IntMatrix a = IntMatrix::from_dense({{1, 2, 3}, {2, 4, 6}});
    CHECK(smith_normal_form(a).rank() == 1);
    IntMatrix z(3, 2);
    CHECK(smith_normal_form(z).rank() == 0);
    CHECK(invariant_factors(z).empty());
    IntMatrix col = IntMatrix::from_dense({{4}, {6}, {10}});
    CHECK(invariant_factors(col) == std::vector<Integer>{2});
}

TEST_CASE("big-integer fallback") {
    const long big = 1L << 62;
    IntMatrix a = IntMatrix::from_dense({{big, 1}, {1, big}});
    SnfResult s = smith_normal_form(a);
    CHECK(last_snf_used_bigint());
    Integer det = Integer(big) * big - 1;
    CHECK(s.D.get(0, 0) == 1);
    CHECK(s.D.get(1, 1) == det);
    CHECK(invariant_factors(a) == std::vector<Integer>{1, det});
    smith_normal_form(IntMatrix::from_dense({{2, 0}, {0, 3}}));
    CHECK_FALSE(last_snf_used_bigint());
}

TEST_CASE("finitely generated abelian groups") {
    FgAbGroup g = FgAbGroup::from_cyclic(1, {6, 4, 1});
    CHECK(g.torsion == std::vector<long>{2, 12});
    CHECK(g.to_string() == "Z + Z/2 + Z/12");
    CHECK(FgAbGroup::from_cyclic(0, {3, 5}).torsion == std::vector<long>{15});
    CHECK(FgAbGroup{}.to_string() == "0");
    CHECK(FgAbGroup::free(4).to_string() == "Z^4");
    CHECK(FgAbGroup::from_json(g.to_json()) == g);
}

TEST_CASE("homology rejects non-complexes") {
    CwComplex c = CwComplex::with_counts({1, 1, 1});
    c.boundary[1].set(0, 0, 1);
    c.boundary[2].set(0, 0, 1);
    std::string where;
    CHECK_FALSE(c.boundary_squares_to_zero(&where));
    CHECK_FALSE(where.empty());
    CHECK_THROWS_AS(homology(c), std::invalid_argument);
}

TEST_CASE("cellular homology of small CW complexes") {
    // one cell per degree, d2 = 2
    CwComplex rp2 = CwComplex::with_counts({1, 1, 1});
    rp2.boundary[2].set(0, 0, 2);
    auto h = homology(rp2);
    CHECK(h[1] == FgAbGroup{0, {2}});
    CHECK(h[2].is_trivial());
    CHECK(homology_mod2(rp2) == std::vector<int>{1, 1, 1});
    CHECK(euler_characteristic(rp2) == 1);
    CHECK(betti_numbers(h) == std::vector<int>{1, 0, 0});
    auto j = homology_json(h, 1);
    CHECK(j["chi"] == 1);
}

TEST_CASE("induced maps on rational homology") {
    // S^1 with two vertices and two edges; the flip swaps everything
    auto c = std::make_shared<CwComplex>(CwComplex::with_counts({2, 2}));
    c->boundary[1] = IntMatrix::from_dense({{-1, 1}, {1, -1}});
    CellMap flip{c, c, {IntMatrix::from_dense({{0, 1}, {1, 0}}), IntMatrix::from_dense({{0, 1}, {1, 0}})}};
    CHECK(flip.is_chain_map());
    CHECK(induced_on_homology(flip, 1).is_identity());
    // the reflection swaps the vertices and reverses each edge
    CellMap reflect{c, c, {IntMatrix::from_dense({{0, 1}, {1, 0}}), IntMatrix::from_dense({{-1, 0}, {0, -1}})}};
    CHECK(reflect.is_chain_map());
    CHECK(induced_on_homology(reflect, 1)(0, 0) == -1);
    CHECK(reflect.order() == 2);
    CellMap bad{c, c, {IntMatrix::from_dense({{1, 0}, {0, 1}}), IntMatrix::from_dense({{1, 0}, {0, 0}})}};
    CHECK_FALSE(bad.is_chain_map());
}

TEST_CASE("property: Smith normal form re-verification") {
    RandomSource r(test::kSeed + 40);
    PropertyResult p = snf_reverification(r, 1500);
    CHECK(p.cases == 1500);
    CHECK_MESSAGE(p.failures == 0, p.first_failure.dump());
}

}  // TEST_SUITE
