#include "hypcy/lie/singularity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace hypcy {

CycloMatrix2 CycloMatrix2::identity(int m) {
    return {{CycloScalar(m, Rational(1)), CycloScalar(m), CycloScalar(m), CycloScalar(m, Rational(1))}};
}

CycloMatrix2 CycloMatrix2::diag(const CycloScalar& a, const CycloScalar& b) {
    return {{a, CycloScalar(a.m()), CycloScalar(a.m()), b}};
}

CycloMatrix2 CycloMatrix2::operator*(const CycloMatrix2& o) const {
    return {{e[0] * o.e[0] + e[1] * o.e[2], e[0] * o.e[1] + e[1] * o.e[3], e[2] * o.e[0] + e[3] * o.e[2],
             e[2] * o.e[1] + e[3] * o.e[3]}};
}

CycloMatrix2 CycloMatrix2::operator-(const CycloMatrix2& o) const {
    return {{e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2], e[3] - o.e[3]}};
}

CycloScalar CycloMatrix2::det() const { return e[0] * e[3] - e[1] * e[2]; }

bool CycloMatrix2::is_identity() const {
    return e[0].is_one() && e[1].is_zero() && e[2].is_zero() && e[3].is_one();
}

bool CycloMatrix2::is_scalar_minus_identity() const {
    return (-e[0]).is_one() && e[1].is_zero() && e[2].is_zero() && (-e[3]).is_one();
}

CycloMatrix2 lift_generator(int m) {
    if (m < 2) throw std::invalid_argument("lift_generator: m >= 2");
    return CycloMatrix2::diag(CycloScalar::zeta_power(m, 1), CycloScalar::zeta_power(m, -1));
}

namespace {

template <class Stop>
int matrix_order(const CycloMatrix2& g, int bound, Stop stop) {
    CycloMatrix2 p = g;
    for (int k = 1; k <= bound; ++k) {
        if (stop(p)) return k;
        p = p * g;
    }
    return 0;
}

}  // namespace

int lift_order(int m) {
    const CycloMatrix2 U = lift_generator(m);
    const CycloMatrix2 I = CycloMatrix2::identity(m);
    CycloMatrix2 p = U;
    for (int k = 1; k <= 4 * m; ++k) {
        if (p.is_identity()) return k;
        if ((p - I).det().is_zero())
            throw std::logic_error("lift_order: U^" + std::to_string(k) + " has eigenvalue 1 but is not I");
        p = p * U;
    }
    throw std::logic_error("lift_order: no finite order found");
}

FixedLocus model_fixed_locus(int m) {
    if (m < 2) throw std::invalid_argument("model_fixed_locus: m = 1 is the trivial action");
    FixedLocus f;
    f.m = m;
    const std::vector<std::pair<std::string, long>> action = {{"x", 0}, {"y", -2}, {"z", 2}, {"w", 0}};
    for (const auto& [name, e] : action) {
        // c v = v  <=>  (c - 1) v = 0, and c - 1 is a field element
        const CycloScalar c = CycloScalar::zeta_power(m, e);
        if ((c - CycloScalar(m, Rational(1))).is_zero()) {
            f.free_coords.push_back(name);
        } else {
            f.zero_coords.push_back(name);
            f.normal_exponents.push_back(e);
            f.normal_weights.push_back(c);
        }
    }
    if (f.free_coords == std::vector<std::string>{"x", "w"}) f.relation = "xw=1";
    f.weight_order = 1;
    for (const auto& w : f.normal_weights) {
        const long o = cyclo_power_order(w).value_or(0);
        f.weight_order = std::lcm(f.weight_order, o);
    }
    const CycloMatrix2 U = lift_generator(m);
    const CycloMatrix2 U2 = U * U;
    f.u2_order = matrix_order(U2, 4 * m, [](const CycloMatrix2& p) { return p.is_identity(); });
    f.u2_projective_order = matrix_order(
        U2, 4 * m, [](const CycloMatrix2& p) { return p.is_identity() || p.is_scalar_minus_identity(); });
    // eigenvalues of the diagonal U^2 as a multiset
    std::vector<std::string> eig = {U2.e[0].to_string(), U2.e[3].to_string()}, ws;
    for (const auto& w : f.normal_weights) ws.push_back(w.to_string());
    std::sort(eig.begin(), eig.end());
    std::sort(ws.begin(), ws.end());
    f.weights_are_u2_eigenvalues = U2.e[1].is_zero() && U2.e[2].is_zero() && U2.det().is_one() && eig == ws;
    return f;
}

nlohmann::json FixedLocus::to_json() const {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& x : normal_weights) w.push_back(x.to_string());
    return {{"m", m},
            {"free", free_coords},
            {"zero", zero_coords},
            {"relation", relation},
            {"normal_exponents", normal_exponents},
            {"normal_weights", w},
            {"weight_order", weight_order},
            {"u2_order", u2_order},
            {"u2_projective_order", u2_projective_order},
            {"weights_are_u2_eigenvalues", weights_are_u2_eigenvalues}};
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
    return {a * o.a - b * o.b - c * o.c - d * o.d, a * o.b + b * o.a + c * o.d - d * o.c,
            a * o.c - b * o.d + c * o.a + d * o.b, a * o.d + b * o.c - c * o.b + d * o.a};
}

Rational Quaternion::norm() const {
    const Quaternion p = *this * conj();
    if (p.b != 0 || p.c != 0 || p.d != 0) throw std::logic_error("Quaternion::norm: q conj(q) not real");
    return p.a;
}

Quaternion quaternion_of(const Rational& re1, const Rational& im1, const Rational& re2, const Rational& im2) {
    const Quaternion z1{re1, im1, 0, 0};
    const Quaternion z2{re2, im2, 0, 0};
    const Quaternion j{0, 0, 1, 0};
    const Quaternion jz2 = j * z2;
    return {z1.a + jz2.a, z1.b + jz2.b, z1.c + jz2.c, z1.d + jz2.d};
}

namespace {

Rational random_q(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

}  // namespace

IdentityCheck quaternion_hermitian_check(int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    IdentityCheck r;
    r.samples = samples;
    for (int s = 0; s < samples; ++s) {
        std::array<Rational, 8> w;
        for (auto& x : w) x = random_q(rng);
        const Rational h = w[0] * w[0] + w[1] * w[1] + w[2] * w[2] + w[3] * w[3] - w[4] * w[4] - w[5] * w[5] -
                           w[6] * w[6] - w[7] * w[7];
        const Quaternion p1 = quaternion_of(w[0], w[1], w[2], w[3]);
        const Quaternion p2 = quaternion_of(w[4], w[5], w[6], w[7]);
        const Rational hq = p1.norm() - p2.norm();
        if (h == hq) {
            ++r.passed;
        } else if (r.first_failure.empty()) {
            r.first_failure = "sample " + std::to_string(s) + ": h=" + h.get_str() + " h'=" + hq.get_str();
        }
    }
    return r;
}

namespace {

// polynomials in (l1, l2, s, t)
using Mono = std::array<int, 4>;
using Poly = std::map<Mono, Rational>;

Poly var(int i) {
    Mono m{0, 0, 0, 0};
    m[i] = 1;
    return {{m, Rational(1)}};
}

Poly mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Mono m;
            for (int i = 0; i < 4; ++i) m[i] = ma[i] + mb[i];
            r[m] += ca * cb;
        }
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

Poly sub(Poly a, const Poly& b) {
    for (const auto& [m, c] : b) a[m] -= c;
    for (auto it = a.begin(); it != a.end();) it = it->second == 0 ? a.erase(it) : std::next(it);
    return a;
}

bool is_zero(const Poly& p) { return p.empty(); }

}  // namespace

ConifoldCheck conifold_incidence_check(int samples, std::uint64_t seed) {
    const Poly l1 = var(0), l2 = var(1), s = var(2), t = var(3);
    // point of O(-1) + O(-1) over [s:t]: (a, b) = l1 (s, t), (c, d) = l2 (s, t)
    const Poly a = mul(l1, s), b = mul(l1, t), c = mul(l2, s), d = mul(l2, t);
    struct P4 {
        Poly x, y, z, w;
    };
    const P4 first{a, b, c, d};   // ((a,b),(c,d)) -> (a,b,c,d)
    const P4 second{a, c, b, d};  // ((a,b),(c,d)) -> (a,c,b,d)
    auto cone = [](const P4& p) { return sub(mul(p.x, p.w), mul(p.y, p.z)); };
    auto ruling1 = [&](const P4& p) { return is_zero(sub(mul(p.x, t), mul(p.y, s))) && is_zero(sub(mul(p.z, t), mul(p.w, s))); };
    auto ruling2 = [&](const P4& p) { return is_zero(sub(mul(p.x, t), mul(p.z, s))) && is_zero(sub(mul(p.y, t), mul(p.w, s))); };
    ConifoldCheck r;
    r.first_on_cone = is_zero(cone(first));
    r.second_on_cone = is_zero(cone(second));
    r.first_ruling = ruling1(first);
    r.second_ruling = ruling2(second);
    r.rulings_differ = !ruling2(first) && !ruling1(second);
    {
        // ((1,0),(0,1)) is not a proportional pair
        const long x = 1, y = 0, z = 0, w = 1;
        if (x * w - y * z != 0) r.witness = "(1,0,0,1): xw-yz=1";
    }
    std::mt19937_64 rng(seed);
    r.samples.samples = samples;
    for (int i = 0; i < samples; ++i) {
        const Rational L1 = random_q(rng), L2 = random_q(rng), S = random_q(rng), T = random_q(rng);
        const Rational x1 = L1 * S, y1 = L1 * T, z1 = L2 * S, w1 = L2 * T;
        const Rational x2 = L1 * S, y2 = L2 * S, z2 = L1 * T, w2 = L2 * T;
        if (x1 * w1 - y1 * z1 == 0 && x2 * w2 - y2 * z2 == 0) {
            ++r.samples.passed;
        } else if (r.samples.first_failure.empty()) {
            r.samples.first_failure = "sample " + std::to_string(i);
        }
    }
    return r;
}

}  // namespace hypcy
