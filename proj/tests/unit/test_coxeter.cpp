#include <doctest.h>

#include <memory>
#include <numeric>

#include "hypcy/coxeter/hyperbolic.hpp"
#include "hypcy/coxeter/polytope.hpp"
#include "test_util.hpp"

using namespace hypcy;

namespace {

std::shared_ptr<const ReflectionGroup> group_of(const std::vector<int>& s, std::size_t bound = 20000) {
    return std::make_shared<const ReflectionGroup>(generate_group(CoxeterDiagram::linear(s), bound));
}

// the 120-cell is shared across cases; building it takes a moment
const FaceLattice& cell120() {
    static const FaceLattice L = build_120cell(group_of({5, 3, 3}));
    return L;
}

int alternating(const std::vector<int>& f) {
    int s = 0;
    for (std::size_t k = 0; k < f.size(); ++k) s += (k % 2 ? -1 : 1) * f[k];
    return s;
}

}  // namespace

TEST_SUITE("coxeter") {

TEST_CASE("orders of finite Coxeter groups") {
    // classical orders: I2(3), I2(5), A3, H3, A4, H4
    CHECK(group_of({3})->order() == 6);
    CHECK(group_of({5})->order() == 10);
    CHECK(group_of({3, 3})->order() == 24);
    CHECK(group_of({5, 3})->order() == 120);
    CHECK(group_of({3, 3, 3})->order() == 120);
    CHECK(group_of({5, 3, 3})->order() == 14400);
}

TEST_CASE("enumeration bound is enforced") {
    CHECK_THROWS_AS(generate_group(CoxeterDiagram::linear({5, 3, 3}), 1000), std::runtime_error);
    CHECK_THROWS_AS(generate_group(CoxeterDiagram::linear({5, 3, 3, 5}), 20000), std::runtime_error);
}

TEST_CASE("longest element has length = number of reflections") {
    struct Case {
        std::vector<int> s;
        std::size_t len;
    };
    for (const Case& c : {Case{{3, 3}, 6}, Case{{5, 3}, 15}, Case{{3, 3, 3}, 10}, Case{{5, 3, 3}, 60}}) {
        auto g = group_of(c.s);
        CHECK(g->word(g->longest()).size() == c.len);
    }
    auto h3 = group_of({5, 3});
    GoldenMatrix w0 = h3->matrix(h3->longest());
    CHECK(w0 + GoldenMatrix::identity(3) == GoldenMatrix(3, 3));
}

TEST_CASE("group operations (random elements of H3 and H4)") {
    std::mt19937_64 rng(test::kSeed + 20);
    for (const auto& s : {std::vector<int>{5, 3}, std::vector<int>{5, 3, 3}}) {
        auto g = group_of(s);
        const auto n = static_cast<ReflectionGroup::Elem>(g->order());
        CHECK(g->word(0).empty());
        for (int t = 0; t < 500; ++t) {
            ReflectionGroup::Elem x = rng() % n, y = rng() % n, z = rng() % n;
            REQUIRE(g->multiply(g->multiply(x, y), z) == g->multiply(x, g->multiply(y, z)));
            REQUIRE(g->multiply(x, g->inverse(x)) == 0);
            REQUIRE(g->matrix(g->multiply(x, y)) == g->matrix(x) * g->matrix(y));
            REQUIRE(g->find(g->matrix(x)) == x);
            // the stored word evaluates to x
            ReflectionGroup::Elem w = 0;
            for (auto letter : g->word(x)) w = g->right_gen(w, letter);
            REQUIRE(w == x);
        }
    }
}

TEST_CASE("parabolic numbering matches the standalone group") {
    auto gram = gram_of_diagram(CoxeterDiagram::linear({5, 3, 3, 5}));
    ReflectionGroup para = generate_parabolic(gram, {0, 1, 2, 3}, 20000);
    auto h4 = group_of({5, 3, 3});
    REQUIRE(para.order() == h4->order());
    for (ReflectionGroup::Elem x = 0; x < para.order(); x += 97) CHECK(para.word(x) == h4->word(x));
}

TEST_CASE("regular polytopes from Wythoff cosets") {
    struct Case {
        std::vector<int> s;
        std::vector<int> f;
    };
    for (const Case& c : {Case{{3, 3}, {4, 6, 4}}, Case{{5, 3}, {20, 30, 12}}, Case{{3, 5}, {12, 30, 20}},
                          Case{{3, 3, 3}, {5, 10, 10, 5}}}) {
        FaceLattice L = build_polytope(group_of(c.s));
        CHECK(L.fvector() == c.f);
        // Euler: chi of the boundary sphere
        CHECK(alternating(L.fvector()) == (L.dim() % 2 ? 2 : 0));
        CHECK(diamond_property(L));
    }
}

TEST_CASE("120-cell counts and incidences") {
    const FaceLattice& L = cell120();
    CHECK(L.fvector() == std::vector<int>{600, 1200, 720, 120});
    CHECK(alternating(L.fvector()) == 0);
    auto all = [](const std::vector<int>& v, int x) {
        return std::all_of(v.begin(), v.end(), [x](int y) { return y == x; });
    };
    CHECK(all(incidence_degrees(L, 1, 2), 3));
    CHECK(all(incidence_degrees(L, 1, 3), 3));
    CHECK(all(incidence_degrees(L, 0, 1), 4));
    CHECK(all(incidence_degrees(L, 0, 3), 4));
    CHECK(all(incidence_degrees(L, 2, 3), 2));
    // a dodecahedron has 12 pentagons, each with 5 edges
    CHECK(L.subcells(3, 0, 2).size() == 12);
    CHECK(L.subcells(3, 0, 0).size() == 20);
    for (int f = 0; f < L.count(2); ++f) REQUIRE(L.faces(2, f).size() == 5);
}

TEST_CASE("group action preserves incidence") {
    const FaceLattice& L = cell120();
    std::mt19937_64 rng(test::kSeed + 21);
    for (int t = 0; t < 300; ++t) {
        auto g = static_cast<ReflectionGroup::Elem>(rng() % 14400);
        int k = 1 + static_cast<int>(rng() % 3);
        int c = static_cast<int>(rng() % static_cast<unsigned>(L.count(k)));
        int gc = L.act(g, k, c);
        for (int f : L.faces(k, c)) REQUIRE(L.incident(k, gc, L.act(g, k - 1, f)));
    }
}

TEST_CASE("hyperbolic realization and antipodal pairing") {
    const FaceLattice& L = cell120();
    HyperbolicRealization R = realize_hyperbolic(L);
    CHECK(R.ambient_signature == Signature{4, 1, 0});
    CHECK(R.normals.size() == 120);
    CHECK(R.adjacent_pairs == 720);
    CHECK(R.separated_pairs == 120 * 119 / 2 - 720);
    FacePairing P = antipodal_pairing(L, R);
    CHECK(P.pairs.size() == 60);
    for (int f = 0; f < 120; ++f) {
        REQUIRE(P.partner[P.partner[f]] == f);
        REQUIRE(P.partner[f] != f);
    }
    for (const auto& p : P.pairs) {
        REQUIRE(is_isometry(p.isometry, *R.gram));
        REQUIRE(p.isometry.entries * p.isometry.entries == GoldenMatrix::identity(5));
    }
}

}  // TEST_SUITE
