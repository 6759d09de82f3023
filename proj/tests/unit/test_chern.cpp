#include <doctest.h>

#include "hypcy/chern/chern.hpp"
#include "test_util.hpp"

using namespace hypcy;

namespace {

GradedClass truncate(const GradedClass& c, int max_k) {
    GradedClass r;
    for (int k = 0; k <= max_k; ++k) r += c.degree_part(k);
    return r;
}

}  // namespace

TEST_SUITE("chern") {

TEST_CASE("graded class arithmetic") {
    GradedClass a = GradedClass::gen("a"), b = GradedClass::gen("b");
    GradedClass s = (a + b) * (a + b);
    CHECK(s.coefficient({{"a", 2}}) == 1);
    CHECK(s.coefficient({{"a", 1}, {"b", 1}}) == 2);
    CHECK(s.max_degree() == 4);
    CHECK((s - s).is_zero());
    CHECK(GradedClass().max_degree() == -1);
    CHECK((a * b).substitute({{"b", a}}) == a * a);
    CHECK((GradedClass::constant(3) + a).degree_part(0) == GradedClass::constant(3));
}

TEST_CASE("twistor c1 against hand-expanded Chern roots") {
    for (int n = 1; n <= 8; ++n) {
        // roots h_i of H; Lambda^2 H^* has roots -h_i - h_j for i < j
        GradedClass sum_h, want;
        for (int i = 1; i <= n; ++i) sum_h += GradedClass::gen("H_" + std::to_string(i));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                want -= GradedClass::gen("H_" + std::to_string(i)) + GradedClass::gen("H_" + std::to_string(j));
        want += sum_h;
        CHECK(want == static_cast<long>(2 - n) * sum_h);

        TwistorResult t = twistor_c1(n);
        CHECK(t.coefficient == n - 2);
        CHECK(t.roots_agree);
        CHECK(t.c1_in_h.substitute({{c1_symbol("H"), sum_h}}) == want);
        CHECK(t.c1_in_omega == GradedClass::gen("omega", n - 2));
        CHECK_FALSE(t.steps.empty());
    }
    CHECK(twistor_c1_coefficient(3) == 1);
    CHECK_THROWS_AS(twistor_c1(0), std::invalid_argument);
}

TEST_CASE("pairings on S^2 x T^2") {
    PairingRing E = sphere_times_elliptic();
    GradedClass g1 = GradedClass::gen("g1"), g2 = GradedClass::gen("g2");
    CHECK(E.pair(g1 * g2) == 1);
    CHECK(E.pair(g1 * g1) == 0);
    CHECK(E.reduce(g1 * g1 * g2).is_zero());
    CHECK_THROWS_AS(E.pair(g1), std::domain_error);

    // O(g1) + O(-g1): c1 = 0, c2 = -g1^2, p1 = 2 g1^2 which dies in the ring
    Bundle V = BundleExpr::sum(BundleExpr::line({"g1", "g2"}, {1, 0}), BundleExpr::line({"g1", "g2"}, {-1, 0}));
    CHECK(c1(V).is_zero());
    CHECK(p1(V) == 2 * (g1 * g1));
    CHECK(E.reduce(p1(V)).is_zero());
    CHECK(chern_pairing(V, 2, E) == 0);
    CHECK_THROWS_AS(chern_pairing(V, 3, E), std::domain_error);
}

TEST_CASE("property: p1 of a sum of line bundles") {
    std::mt19937_64 rng(test::kSeed + 60);
    std::uniform_int_distribution<long> d(-6, 6);
    PairingRing E = sphere_times_elliptic();
    for (int t = 0; t < 400; ++t) {
        long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
        Bundle V = BundleExpr::sum(BundleExpr::line({"g1", "g2"}, {a, b}), BundleExpr::line({"g1", "g2"}, {c, e}));
        // p1 of a sum of lines is the sum of squares of the roots; <(a g1 + b g2)^2, E> = 2ab
        REQUIRE(E.pair(p1(V)) == 2 * a * b + 2 * c * e);
        REQUIRE(chern_pairing(V, 2, E) == a * e + b * c);
        REQUIRE(chern_pairing(V, 1, E) == 2 * (a + c) * (b + e));
    }
}

TEST_CASE("property: Whitney sum formula") {
    std::mt19937_64 rng(test::kSeed + 61);
    for (int t = 0; t < 200; ++t) {
        int ra = 1 + static_cast<int>(rng() % 3), rb = 1 + static_cast<int>(rng() % 3);
        Bundle A = BundleExpr::leaf("A", ra), B = BundleExpr::leaf("B", rb);
        if (rng() % 2) A = BundleExpr::dual(A);
        if (rng() % 2) B = BundleExpr::lambda2(BundleExpr::sum(B, BundleExpr::leaf("C", 1)));
        const int k = ra + rb;
        GradedClass lhs = total_chern(BundleExpr::sum(A, B), k);
        GradedClass rhs = truncate(total_chern(A, k) * total_chern(B, k), k);
        REQUIRE(lhs == rhs);
        // c1 by the structural rules matches the roots
        Bundle S = BundleExpr::sum(A, B);
        REQUIRE(c1(S).substitute(leaf_root_substitution(S)) == chern_class(S, 1));
    }
}

TEST_CASE("the exceptional divisor computation") {
    ResolutionCheck r = resolution_check();
    CHECK(r.c1.is_zero());
    CHECK(r.c1_squared == 0);
    CHECK(r.c2 == 0);
    CHECK(r.p1.is_zero());
    CHECK(r.p1_value == 0);
    CHECK(r.e_squared == 0);
    CHECK(r.ok());
    CHECK(r.to_json()["ok"] == true);
}

TEST_CASE("bundle construction errors") {
    CHECK_THROWS_AS(BundleExpr::leaf("X", -1), std::invalid_argument);
    CHECK_THROWS_AS(BundleExpr::lambda2(BundleExpr::trivial(0)), std::invalid_argument);
    CHECK_THROWS_AS(BundleExpr::line({"g1"}, {1, 2}), std::invalid_argument);
    CHECK(BundleExpr::lambda2(BundleExpr::leaf("X", 4))->rank() == 6);
    CHECK(c1(BundleExpr::trivial(3)).is_zero());
}

}  // TEST_SUITE
