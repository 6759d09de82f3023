#pragma once

// Machine-word elements a + b*phi of Z[phi]. Reflection matrices of Coxeter
// groups with labels {2,3,5} have entries here, so group enumeration never
// touches GMP. Overflow is checked and throws.

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "hypcy/exact/golden.hpp"

namespace hypcy {

struct ZPhi {
    std::int64_t a = 0;
    std::int64_t b = 0;

    bool is_zero() const { return a == 0 && b == 0; }
    friend bool operator==(ZPhi x, ZPhi y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(ZPhi x, ZPhi y) { return !(x == y); }
    friend bool operator<(ZPhi x, ZPhi y) { return x.a < y.a || (x.a == y.a && x.b < y.b); }

    GoldenScalar to_golden() const { return {Rational(a), Rational(b)}; }
    /// Throws std::domain_error when x is not in Z[phi] or does not fit.
    static ZPhi from_golden(const GoldenScalar& x);
};

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("ZPhi: overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("ZPhi: overflow");
    return r;
}

inline ZPhi operator+(ZPhi x, ZPhi y) { return {checked_add(x.a, y.a), checked_add(x.b, y.b)}; }
inline ZPhi operator-(ZPhi x) { return {-x.a, -x.b}; }
inline ZPhi operator-(ZPhi x, ZPhi y) { return x + (-y); }
inline ZPhi operator*(ZPhi x, ZPhi y) {
    std::int64_t bd = checked_mul(x.b, y.b);
    return {checked_add(checked_mul(x.a, y.a), bd),
            checked_add(checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a)), bd)};
}

inline ZPhi ZPhi::from_golden(const GoldenScalar& x) {
    const Rational& a = x.rational_part();
    const Rational& b = x.phi_part();
    if (a.get_den() != 1 || b.get_den() != 1 || !a.get_num().fits_slong_p() || !b.get_num().fits_slong_p())
        throw std::domain_error("ZPhi: " + x.to_string() + " is not a small element of Z[phi]");
    return {a.get_num().get_si(), b.get_num().get_si()};
}

}  // namespace hypcy
