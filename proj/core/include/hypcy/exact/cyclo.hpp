#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypcy/exact/rational.hpp"

namespace hypcy {

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<long> cyclotomic_polynomial(int n);

/// Euler's totient.
int euler_phi(int n);

/**
 * An element of Q(zeta_{2m}) = Q[x] / Phi_{2m}(x), with x standing for
 * zeta_{2m} = exp(i*pi/m). Coefficients are kept reduced, so the vector
 * always has length euler_phi(2m) and equality is structural.
 */
class CycloScalar {
public:
    explicit CycloScalar(int m);                 // zero
    CycloScalar(int m, const Rational& constant);
    CycloScalar(int m, std::vector<Rational> coeffs);  // reduced on construction

    /// zeta_{2m}^k for any integer k.
    static CycloScalar zeta_power(int m, long k);
    static CycloScalar zeta(int m) { return zeta_power(m, 1); }

    int m() const { return m_; }
    int degree() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;

    CycloScalar operator-() const;
    CycloScalar& operator+=(const CycloScalar& o);
    CycloScalar& operator-=(const CycloScalar& o);
    CycloScalar& operator*=(const CycloScalar& o);
    friend CycloScalar operator+(CycloScalar x, const CycloScalar& y) { return x += y; }
    friend CycloScalar operator-(CycloScalar x, const CycloScalar& y) { return x -= y; }
    friend CycloScalar operator*(CycloScalar x, const CycloScalar& y) { return x *= y; }
    friend bool operator==(const CycloScalar& x, const CycloScalar& y) {
        return x.m_ == y.m_ && x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const CycloScalar& x, const CycloScalar& y) { return !(x == y); }

    CycloScalar pow(long k) const;  // k >= 0
    /// Complex conjugate: zeta -> zeta^{-1}.
    CycloScalar conj() const;

    /// Canonical rendering "poly(c0,c1,...)@zeta2m".
    std::string to_string() const;

private:
    void reduce();
    void check_same_field(const CycloScalar& o) const;

    int m_;
    std::vector<Rational> coeffs_;
};

/**
 * Multiplicative order of u: the least k >= 1 with u^k = 1, searched up to
 * `bound` (defaults to 2m, which bounds every root of unity in Q(zeta_{2m})).
 * Returns nullopt when u is not a root of unity within the bound.
 */
std::optional<long> cyclo_power_order(const CycloScalar& u, long bound = 0);

}  // namespace hypcy
