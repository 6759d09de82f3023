#include "hypcy/exact/cyclo.hpp"

#include <numeric>
#include <stdexcept>

namespace hypcy {

namespace {

// Exact division of integer polynomials (divisor monic).
std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long>& den) {
    const std::size_t dn = den.size() - 1;
    std::vector<long> q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        long c = num[i];
        q[i - dn] = c;
        if (c != 0)
            for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dn; ++i)
        if (num[i] != 0) throw std::logic_error("cyclotomic_polynomial: inexact division");
    return q;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    // x^n - 1 = prod_{d | n} Phi_d(x)
    std::vector<long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_div_exact(p, cyclotomic_polynomial(d));
    return p;
}

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

CycloScalar::CycloScalar(int m) : m_(m) {
    if (m < 1) throw std::invalid_argument("CycloScalar: m must be positive");
    coeffs_.assign(euler_phi(2 * m), Rational(0));
}

CycloScalar::CycloScalar(int m, const Rational& constant) : CycloScalar(m) { coeffs_[0] = constant; }

CycloScalar::CycloScalar(int m, std::vector<Rational> coeffs) : m_(m), coeffs_(std::move(coeffs)) {
    if (m < 1) throw std::invalid_argument("CycloScalar: m must be positive");
    reduce();
}

void CycloScalar::reduce() {
    const auto phi = cyclotomic_polynomial(2 * m_);
    const std::size_t d = phi.size() - 1;
    for (std::size_t i = coeffs_.size(); i-- > d;) {
        Rational c = coeffs_[i];
        if (sgn(c) != 0)
            for (std::size_t j = 0; j <= d; ++j) coeffs_[i - d + j] -= c * phi[j];
    }
    coeffs_.resize(d, Rational(0));
}

void CycloScalar::check_same_field(const CycloScalar& o) const {
    if (m_ != o.m_) throw std::invalid_argument("CycloScalar: mixing Q(zeta_2m) for different m");
}

CycloScalar CycloScalar::zeta_power(int m, long k) {
    const long n = 2L * m;
    long e = ((k % n) + n) % n;
    std::vector<Rational> c(e + 1, Rational(0));
    c[e] = 1;
    return {m, std::move(c)};
}

bool CycloScalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (sgn(c) != 0) return false;
    return true;
}

bool CycloScalar::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return false;
    return true;
}

CycloScalar CycloScalar::operator-() const {
    CycloScalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) {
    check_same_field(o);
    std::vector<Rational> prod(coeffs_.size() + o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(prod);
    reduce();
    return *this;
}

CycloScalar CycloScalar::pow(long k) const {
    if (k < 0) throw std::invalid_argument("CycloScalar::pow: negative exponent");
    CycloScalar result(m_, Rational(1));
    CycloScalar base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

CycloScalar CycloScalar::conj() const {
    CycloScalar r(m_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) r += CycloScalar(m_, coeffs_[i]) * zeta_power(m_, -static_cast<long>(i));
    return r;
}

std::string CycloScalar::to_string() const {
    std::string s = "poly(";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ",";
        s += coeffs_[i].get_str();
    }
    return s + ")@zeta" + std::to_string(2 * m_);
}

std::optional<long> cyclo_power_order(const CycloScalar& u, long bound) {
    if (bound <= 0) bound = 2L * u.m();
    if (u.is_zero()) return std::nullopt;
    CycloScalar p = u;
    for (long k = 1; k <= bound; ++k) {
        if (p.is_one()) return k;
        p *= u;
    }
    return std::nullopt;
}

}  // namespace hypcy
