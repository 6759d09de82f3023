#include <doctest.h>

#include <cmath>
#include <memory>

#include "hypcy/geom/lorentz.hpp"
#include "test_util.hpp"

using namespace hypcy;

namespace {

std::shared_ptr<const GramMatrix> gram_of(const std::vector<int>& schlafli) {
    return std::make_shared<const GramMatrix>(gram_of_diagram(CoxeterDiagram::linear(schlafli)));
}

NormalBasisVector random_vector(std::mt19937_64& rng, std::shared_ptr<const GramMatrix> g) {
    NormalBasisVector v{{}, g};
    for (int i = 0; i < g->rank(); ++i) v.coords.push_back(test::random_golden(rng));
    return v;
}

}  // namespace

TEST_SUITE("lorentz") {

TEST_CASE("gram entries are -cos(pi/m)") {
    auto g = gram_of({5, 3, 3, 5});
    REQUIRE(g->rank() == 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            int m = CoxeterDiagram::linear({5, 3, 3, 5}).label(i, j);
            double want = i == j ? 1.0 : -std::cos(M_PI / m);
            CHECK((*g)(i, j).to_double() == doctest::Approx(want).epsilon(1e-14));
        }
    CHECK((*g)(0, 1) == GoldenScalar(0, Rational(-1, 2)));
    CHECK((*g)(1, 2) == GoldenScalar(Rational(-1, 2)));
    CHECK((*g)(0, 2) == GoldenScalar(0));
}

TEST_CASE("signatures of spherical, affine and hyperbolic diagrams") {
    CHECK(signature(*gram_of({5, 3, 3})) == Signature{4, 0, 0});
    CHECK(signature(*gram_of({3, 3, 3})) == Signature{4, 0, 0});
    CHECK(signature(*gram_of({5, 3})) == Signature{3, 0, 0});
    CHECK(signature(*gram_of({5, 3, 3, 5})) == Signature{4, 1, 0});
    CHECK(signature(*gram_of({3, 5, 3})) == Signature{3, 1, 0});
    CHECK(signature(*gram_of({5, 3, 5})) == Signature{3, 1, 0});
    // affine A2: triangle of 3s
    CoxeterDiagram a2;
    a2.rank = 3;
    a2.labels = {{{0, 1}, 3}, {{1, 2}, 3}, {{0, 2}, 3}};
    CHECK(signature(gram_of_diagram(a2)) == Signature{2, 0, 1});
}

TEST_CASE("unsupported labels are rejected") {
    CHECK_THROWS(gram_of_diagram(CoxeterDiagram::linear({4, 3})));
    CHECK_THROWS(gram_of_diagram(CoxeterDiagram::linear({6})));
}

TEST_CASE("dihedral cosines of simple roots") {
    auto g = gram_of({5, 3, 3, 5});
    auto e = [&](int i) { return NormalBasisVector::basis(g, i); };
    CHECK(dihedral_cosine(e(0), e(1)) == GoldenScalar(0, Rational(1, 2)));  // cos(pi/5) = phi/2
    CHECK(dihedral_cosine(e(1), e(2)) == GoldenScalar(Rational(1, 2)));
    CHECK(dihedral_cosine(e(0), e(3)) == GoldenScalar(0));
    CHECK(is_degenerate_dihedral(dihedral_cosine(e(2), e(2))));
    NormalBasisVector twice{{GoldenScalar(2), 0, 0, 0, 0}, g};
    CHECK_THROWS_AS(dihedral_cosine(twice, e(1)), std::invalid_argument);
}

TEST_CASE("reflections are isometric involutions (random vectors)") {
    std::mt19937_64 rng(test::kSeed + 10);
    for (const auto& s : {std::vector<int>{5, 3, 3}, std::vector<int>{5, 3, 3, 5}}) {
        auto g = gram_of(s);
        for (int i = 0; i < g->rank(); ++i) {
            GoldenMatrix m = reflection_matrix(*g, i);
            CHECK(is_isometry(m, *g));
            CHECK(m * m == GoldenMatrix::identity(g->rank()));
        }
        for (int t = 0; t < 400; ++t) {
            int i = static_cast<int>(rng() % static_cast<unsigned>(g->rank()));
            NormalBasisVector u = random_vector(rng, g), v = random_vector(rng, g);
            NormalBasisVector ru = reflect(i, u), rv = reflect(i, v);
            REQUIRE(inner(ru, rv) == inner(u, v));
            REQUIRE(reflect(i, ru).coords == u.coords);
            REQUIRE(inner(ru, NormalBasisVector::basis(g, i)) == -inner(u, NormalBasisVector::basis(g, i)));
        }
    }
}

TEST_CASE("reflection in an arbitrary spacelike vector") {
    auto g = gram_of({5, 3, 3, 5});
    std::vector<GoldenScalar> d = {1, 1, 0, 0, 0};
    GoldenMatrix m = reflection_in(*g, d);
    CHECK(is_isometry(m, *g));
    CHECK(m * m == GoldenMatrix::identity(5));
    CHECK_FALSE(is_isometry(GoldenMatrix::identity(5) + GoldenMatrix::identity(5), *g));
}

}  // TEST_SUITE
