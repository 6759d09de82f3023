#include <doctest.h>

#include <cmath>

#include "hypcy/exact/cyclo.hpp"
#include "hypcy/exact/golden.hpp"
#include "hypcy/exact/interval.hpp"
#include "test_util.hpp"

using namespace hypcy;

namespace {

// 40 digits of phi and sqrt(5), frozen from an mpmath evaluation.
const Rational kPhi40("16180339887498948482045868343656381177203/10000000000000000000000000000000000000000");
const double kCosPi5 = 0.80901699437494742410;

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("golden product basics") {
    GoldenScalar phi = GoldenScalar::phi();
    CHECK(golden_mul(phi, phi) == GoldenScalar(1, 1));
    GoldenScalar x(1, 1);
    CHECK(x * x.conj() == GoldenScalar(x.norm()));
    CHECK(x.norm() == 1);
    GoldenScalar half_phi(0, Rational(1, 2));
    GoldenScalar sq = half_phi * half_phi;
    CHECK(sq == GoldenScalar(Rational(1, 4), Rational(1, 4)));
    CHECK(std::abs(sq.to_double() - kCosPi5 * kCosPi5) < 1e-12);
    CHECK(half_phi.to_string() == "0 + 1/2*phi");
}

TEST_CASE("golden sign") {
    CHECK(golden_sign(GoldenScalar()) == 0);
    CHECK(golden_sign(GoldenScalar(1, -1)) == -1);
    CHECK(golden_sign(GoldenScalar(2, -1)) == 1);
    // Fibonacci ratios straddle phi; these need the exact fallback at 64 bits.
    Integer f0 = 1, f1 = 1;
    for (int i = 0; i < 80; ++i) {
        Integer f2 = f0 + f1;
        f0 = f1;
        f1 = f2;
        GoldenScalar d(Rational(f1, f0), Rational(-1));
        int expected = (i % 2 == 0) ? 1 : -1;  // F(n+1)/F(n) - phi alternates
        CHECK(golden_sign(d) == expected);
    }
}

TEST_CASE("golden field axioms on random triples") {
    std::mt19937_64 rng(test::kSeed);
    for (int i = 0; i < 1500; ++i) {
        GoldenScalar x = test::random_golden(rng), y = test::random_golden(rng), z = test::random_golden(rng);
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE(x * (y + z) == x * y + x * z);
        REQUIRE(x * y == y * x);
        REQUIRE((x * y).conj() == x.conj() * y.conj());
        REQUIRE(x.conj().conj() == x);
        if (!x.is_zero()) REQUIRE(x * x.inverse() == GoldenScalar(1));
    }
}

TEST_CASE("golden sign agrees with certified intervals") {
    std::mt19937_64 rng(test::kSeed + 1);
    for (int i = 0; i < 1000; ++i) {
        GoldenScalar x = test::random_golden(rng);
        for (int bits : {8, 20, 64}) {
            IntervalValue iv = to_interval(x, bits);
            int s = iv.certain_sign();
            if (s != 0) REQUIRE(golden_sign(x) == s);
        }
    }
}

TEST_CASE("interval enclosures") {
    IntervalValue p = to_interval(GoldenScalar::phi(), 64);
    CHECK(p.contains(kPhi40));
    CHECK(p.width() <= Rational(1, Integer(1) << 60));
    IntervalValue z = to_interval(GoldenScalar(), 64);
    CHECK(z.lo == 0);
    CHECK(z.hi == 0);
    IntervalValue c = to_interval(GoldenScalar(Rational(-1, 2), Rational(1, 2)), 40);
    CHECK(c.lo.get_d() <= 0.30901699437494742);
    CHECK(c.hi.get_d() >= 0.30901699437494742);
    CHECK_THROWS(to_interval(GoldenScalar(1), 4));
}

TEST_CASE("cosine enclosures match golden values") {
    // cos(pi/5) = phi/2, cos(2pi/5) = (phi-1)/2
    IntervalValue a = cos_pi_interval(1, 5, 80);
    IntervalValue b = to_interval(GoldenScalar(0, Rational(1, 2)), 80);
    CHECK_NOTHROW(refine(a, b));
    IntervalValue c = cos_pi_interval(2, 5, 80);
    IntervalValue d = to_interval(GoldenScalar(Rational(-1, 2), Rational(1, 2)), 80);
    CHECK_NOTHROW(refine(c, d));
    CHECK(cos_pi_interval(1, 3, 30).lo == Rational(1, 2));
    CHECK(cos_pi_interval(7, 2, 30).lo == 0);
    for (long n = 2; n <= 24; ++n)
        for (long j = 0; j <= 2 * n; ++j) {
            double ref = std::cos(M_PI * static_cast<double>(j) / static_cast<double>(n));
            IntervalValue iv = cos_pi_interval(j, n, 40);
            REQUIRE(iv.lo.get_d() <= ref + 1e-12);
            REQUIRE(iv.hi.get_d() >= ref - 1e-12);
            REQUIRE(iv.width() <= Rational(1, Integer(1) << 40));
        }
}

TEST_CASE("refinement never widens") {
    IntervalValue prev = to_interval(GoldenScalar(3, -2), 8);
    for (int bits = 12; bits <= 96; bits += 12) {
        IntervalValue next = refine(prev, to_interval(GoldenScalar(3, -2), bits));
        REQUIRE(next.lo >= prev.lo);
        REQUIRE(next.hi <= prev.hi);
        prev = next;
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(euler_phi(2 * 12) == 8);
}

TEST_CASE("cyclotomic power order") {
    CHECK(cyclo_power_order(CycloScalar::zeta(3)) == 6);
    CHECK(cyclo_power_order(CycloScalar::zeta(2).pow(2)) == 2);
    CHECK(!cyclo_power_order(CycloScalar(3, Rational(2))).has_value());
    CHECK(cyclo_power_order(CycloScalar(5, Rational(-1))) == 2);
}

TEST_CASE("cyclotomic roots of unity identities") {
    for (int m = 1; m <= 12; ++m) {
        CycloScalar z = CycloScalar::zeta(m);
        REQUIRE(z.pow(2 * m).is_one());
        REQUIRE(z.pow(m) == CycloScalar(m, Rational(-1)));
        for (long k = 0; k <= 4 * m; ++k) {
            REQUIRE(z.pow(k) == CycloScalar::zeta_power(m, k));
            REQUIRE(z.pow(k) * CycloScalar::zeta_power(m, -k) == CycloScalar(m, Rational(1)));
            REQUIRE(z.pow(k).conj() == CycloScalar::zeta_power(m, -k));
        }
    }
}

TEST_CASE("cyclotomic intervals") {
    CycloScalar z = CycloScalar::zeta(5);
    IntervalValue re = to_interval_real(z, 60);
    IntervalValue im = to_interval_imag(z, 60);
    CHECK(re.lo.get_d() <= std::cos(M_PI / 5) + 1e-15);
    CHECK(re.hi.get_d() >= std::cos(M_PI / 5) - 1e-15);
    CHECK(im.lo.get_d() <= std::sin(M_PI / 5) + 1e-15);
    CHECK(im.hi.get_d() >= std::sin(M_PI / 5) - 1e-15);
    // zeta + zeta^-1 = 2 cos(pi/5) = phi
    IntervalValue s = to_interval_real(z + z.conj(), 60);
    CHECK_NOTHROW(refine(s, to_interval(GoldenScalar::phi(), 60)));
    IntervalValue si = to_interval_imag(z + z.conj(), 60);
    CHECK(si.contains(0));
    CHECK(z.to_string().rfind("poly(", 0) == 0);
}

}  // TEST_SUITE
