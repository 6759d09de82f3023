#include <doctest.h>

#include <complex>
#include <numeric>

#include "hypcy/exact/interval.hpp"
#include "hypcy/lie/singularity.hpp"
#include "hypcy/lie/so.hpp"
#include "test_util.hpp"

using namespace hypcy;

namespace {

QMatrix random_so(std::mt19937_64& rng, int n) {
    QVector c;
    for (int i = 0; i < so_dim(n); ++i) c.push_back(test::random_rational(rng, 5, 3));
    return so_from_coords(n, c);
}

std::complex<double> to_complex(const CycloScalar& x) {
    std::complex<double> z = 0, zeta = std::polar(1.0, M_PI / x.m()), p = 1;
    for (const auto& c : x.coeffs()) {
        z += c.get_d() * p;
        p *= zeta;
    }
    return z;
}

}  // namespace

TEST_SUITE("lie") {

TEST_CASE("so(2n,1) basis and coordinates") {
    for (int n = 1; n <= 4; ++n) {
        CHECK(so_dim(n) == n * (2 * n + 1));
        auto basis = so_basis(n);
        REQUIRE(static_cast<int>(basis.size()) == so_dim(n));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            CHECK(in_so(basis[i]));
            QVector c = so_coords(n, basis[i]);
            for (std::size_t j = 0; j < c.size(); ++j) CHECK(c[j] == (i == j ? 1 : 0));
        }
    }
    CHECK_FALSE(in_so(QMatrix::identity(3)));
}

TEST_CASE("property: bracket is a Lie bracket on so(2n,1)") {
    std::mt19937_64 rng(test::kSeed + 50);
    int cases = 0;
    for (int t = 0; t < 600; ++t) {
        int n = 1 + t % 3;
        QMatrix X = random_so(rng, n), Y = random_so(rng, n), Z = random_so(rng, n);
        QMatrix XY = bracket(X, Y);
        REQUIRE(in_so(XY));
        REQUIRE((XY + bracket(Y, X)).is_zero());
        QMatrix jac = bracket(X, bracket(Y, Z)) + bracket(Y, bracket(Z, X)) + bracket(Z, bracket(X, Y));
        REQUIRE(jac.is_zero());
        // ad_X in coordinates agrees with the bracket
        REQUIRE(ad_matrix(n, X).apply(so_coords(n, Y)) == so_coords(n, XY));
        ++cases;
    }
    CHECK(cases == 600);
}

TEST_CASE("tangent decomposition at xi") {
    for (int n = 1; n <= 4; ++n) {
        XiPoint xi = XiPoint::standard(n);
        CHECK((xi.J0 * xi.J0 + QMatrix::identity(2 * n)).is_zero());
        RepDecomposition d = tangent_decomposition(xi);
        CHECK(static_cast<int>(d.stabilizer.size()) == n * n);
        CHECK(static_cast<int>(d.lambda2.size()) == n * (n - 1));
        CHECK(static_cast<int>(d.cn.size()) == 2 * n);
        // stabilizer elements are block matrices commuting with J0 and killing the u part
        for (const auto& v : d.stabilizer) {
            SoElement e = SoElement::from_matrix(n, so_from_coords(n, v));
            for (const auto& x : e.u) CHECK(x == 0);
            CHECK((e.A * xi.J0 - xi.J0 * e.A).is_zero());
        }
        // ad_xi restricted to the complement squares to -4 and -1 on the summands
        QMatrix adc = ad_on_complement(d, so_coords(n, xi.matrix()));
        QMatrix sq = adc * adc;
        int k = 0;
        for (int i = 0; i < sq.rows(); ++i) k += sq(i, i) == (i < n * (n - 1) ? -4 : -1);
        CHECK(k == n * (n - 1) + 2 * n);
        CHECK(d.to_json()["cn"].size() == static_cast<std::size_t>(2 * n));
    }
}

TEST_CASE("invariant 2-forms and the Kirillov form") {
    for (int n = 1; n <= 4; ++n) {
        RepDecomposition d = tangent_decomposition(XiPoint::standard(n));
        InvariantForms f = invariant_two_forms(d);
        CHECK(f.dim() == (n >= 2 ? 2 : 1));
        CHECK(f.cross == 0);
        CHECK(f.on_cn == 1);
        CHECK(f.on_lambda2 == (n >= 2 ? 1 : 0));
        for (const auto& w : f.forms) CHECK(w.is_antisymmetric());

        KirillovForm k = kirillov_form(XiPoint::standard(n));
        CHECK(k.antisymmetric);
        CHECK(k.nondegenerate);
        CHECK(k.kernel.empty());
        CHECK(k.block_diagonal);
        REQUIRE(k.cn_ratios.size() == static_cast<std::size_t>(n));
        for (const auto& q : k.cn_ratios) CHECK(q == k.cn_ratios.front());
        CHECK(k.omega.determinant() != 0);
    }
    for (int n = 1; n <= 3; ++n) CHECK(kirillov_inclusion_ratio(n) == 1);
}

TEST_CASE("cyclotomic arithmetic against floating point") {
    std::mt19937_64 rng(test::kSeed + 51);
    for (int t = 0; t < 300; ++t) {
        int m = 2 + t % 9;
        int deg = euler_phi(2 * m);
        std::vector<Rational> a, b;
        for (int i = 0; i < deg; ++i) {
            a.push_back(test::random_rational(rng, 6, 4));
            b.push_back(test::random_rational(rng, 6, 4));
        }
        CycloScalar x(m, a), y(m, b);
        std::complex<double> p = to_complex(x * y), q = to_complex(x) * to_complex(y);
        REQUIRE(std::abs(p - q) < 1e-9 * (1 + std::abs(q)));
        REQUIRE(std::abs(to_complex(x.conj()) - std::conj(to_complex(x))) < 1e-9 * (1 + std::abs(q)));
        IntervalValue re = to_interval_real(x, 64);
        REQUIRE(re.lo.get_d() <= to_complex(x).real() + 1e-12);
        REQUIRE(re.hi.get_d() >= to_complex(x).real() - 1e-12);
    }
}

TEST_CASE("orders of roots of unity") {
    for (int m = 2; m <= 12; ++m)
        for (long k = 0; k < 2 * m; ++k) {
            long want = 2 * m / std::gcd(k, 2L * m);
            REQUIRE(cyclo_power_order(CycloScalar::zeta_power(m, k)) == want);
        }
    CHECK_FALSE(cyclo_power_order(CycloScalar(5, Rational(2))).has_value());
    CHECK(euler_phi(12) == 4);
    CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
}

TEST_CASE("lift orders and the fixed locus") {
    for (int m = 2; m <= 12; ++m) {
        CHECK(lift_order(m) == 2 * m);
        CycloMatrix2 U = lift_generator(m);
        CHECK(U.det().is_one());
        CHECK(U.e[0] == CycloScalar::zeta(m));
        // U^m = -I: the lift is a genuine double cover of the Z/m action
        CycloMatrix2 p = CycloMatrix2::identity(m);
        for (int i = 0; i < m; ++i) p = p * U;
        CHECK(p.is_scalar_minus_identity());

        FixedLocus f = model_fixed_locus(m);
        CHECK(f.free_coords == std::vector<std::string>{"x", "w"});
        CHECK(f.zero_coords == std::vector<std::string>{"y", "z"});
        CHECK(f.relation == "xw=1");
        CHECK(f.weights_are_u2_eigenvalues);
        CHECK(f.weight_order == m);
        CHECK(f.u2_order == m);
        CHECK(f.u2_projective_order == (m % 2 ? m : m / 2));
        CHECK(std::accumulate(f.normal_exponents.begin(), f.normal_exponents.end(), 0L) == 0);
    }
}

TEST_CASE("quaternions and the hermitian identity") {
    Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
    CHECK((i * j).d == 1);
    CHECK((j * i).d == -1);
    CHECK((i * i).a == -1);
    Quaternion q = quaternion_of(1, 2, 3, 4), r = quaternion_of(-1, 0, Rational(1, 2), 5);
    CHECK(q.norm() == 30);
    CHECK((q * r).norm() == q.norm() * r.norm());
    CHECK((k * k).a == -1);
    IdentityCheck h = quaternion_hermitian_check(500, test::kSeed);
    CHECK(h.ok());
    CHECK(h.samples == 500);
}

TEST_CASE("conifold incidence") {
    ConifoldCheck c = conifold_incidence_check(500, test::kSeed);
    CHECK(c.first_on_cone);
    CHECK(c.second_on_cone);
    CHECK(c.first_ruling);
    CHECK(c.second_ruling);
    CHECK(c.rulings_differ);
    CHECK_FALSE(c.witness.empty());
    CHECK(c.ok());
}

}  // TEST_SUITE
