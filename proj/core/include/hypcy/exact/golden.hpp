#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>

#include "hypcy/exact/rational.hpp"

namespace hypcy {

/**
 * An element a + b*phi of the golden field Q(sqrt 5), phi = (1 + sqrt 5)/2.
 *
 * The (1, phi) basis keeps every Coxeter matrix entry of the H4 and
 * [5,3,3,5] reflection groups integral over Z[phi]. The representation is
 * unique, so equality and hashing are structural.
 */
class GoldenScalar {
public:
    GoldenScalar() = default;
    GoldenScalar(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    GoldenScalar(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    GoldenScalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static GoldenScalar phi() { return {Rational(0), Rational(1)}; }

    const Rational& rational_part() const { return a_; }
    const Rational& phi_part() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    /// Galois conjugate: phi -> 1 - phi.
    GoldenScalar conj() const { return {a_ + b_, -b_}; }
    /// Field norm x * conj(x) = a^2 + ab - b^2.
    Rational norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }
    GoldenScalar inverse() const;

    GoldenScalar operator-() const { return {-a_, -b_}; }
    GoldenScalar& operator+=(const GoldenScalar& o);
    GoldenScalar& operator-=(const GoldenScalar& o);
    GoldenScalar& operator*=(const GoldenScalar& o);
    GoldenScalar& operator/=(const GoldenScalar& o);

    friend GoldenScalar operator+(GoldenScalar x, const GoldenScalar& y) { return x += y; }
    friend GoldenScalar operator-(GoldenScalar x, const GoldenScalar& y) { return x -= y; }
    friend GoldenScalar operator*(const GoldenScalar& x, const GoldenScalar& y);
    friend GoldenScalar operator/(GoldenScalar x, const GoldenScalar& y) { return x /= y; }

    friend bool operator==(const GoldenScalar& x, const GoldenScalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const GoldenScalar& x, const GoldenScalar& y) { return !(x == y); }

    /// Lexicographic on (a, b); a total order used only for canonical sorting.
    friend bool lex_less(const GoldenScalar& x, const GoldenScalar& y) {
        return x.a_ < y.a_ || (x.a_ == y.a_ && x.b_ < y.b_);
    }

    double to_double() const;
    /// Canonical rendering "a + b*phi", e.g. "1/2 + -1/2*phi".
    std::string to_string() const;
    std::size_t hash() const;

private:
    Rational a_{0};
    Rational b_{0};
};

/// Exact product; the same as operator*.
GoldenScalar golden_mul(const GoldenScalar& x, const GoldenScalar& y);

/**
 * Exact sign of a + b*phi.
 *
 * A 64-bit certified interval settles the common case; otherwise the sign is
 * decided by comparing (a + b/2)^2 against 5 b^2 / 4.
 */
int golden_sign(const GoldenScalar& x);

inline bool operator<(const GoldenScalar& x, const GoldenScalar& y) { return golden_sign(y - x) > 0; }
inline bool operator<=(const GoldenScalar& x, const GoldenScalar& y) { return golden_sign(y - x) >= 0; }

std::ostream& operator<<(std::ostream& os, const GoldenScalar& x);

}  // namespace hypcy

template <>
struct std::hash<hypcy::GoldenScalar> {
    std::size_t operator()(const hypcy::GoldenScalar& x) const noexcept { return x.hash(); }
};
