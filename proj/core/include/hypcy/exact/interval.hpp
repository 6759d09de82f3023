#pragma once

#include <string>

#include "hypcy/exact/cyclo.hpp"
#include "hypcy/exact/golden.hpp"
#include "hypcy/exact/rational.hpp"

namespace hypcy {

/// A closed interval [lo, hi] with dyadic endpoints.
struct IntervalValue {
    Rational lo{0};
    Rational hi{0};
    int precision_bits = 0;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& q) const { return lo <= q && q <= hi; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    /// +1 / -1 when the interval lies strictly on one side of zero, else 0.
    int certain_sign() const { return sgn(lo) > 0 ? 1 : (sgn(hi) < 0 ? -1 : 0); }
    std::string to_string() const;
};

/// Dyadic enclosure of sqrt(5) with width 2^-bits.
IntervalValue sqrt5_interval(int bits);

/**
 * Certified enclosure of cos(pi * j / n), computed without any floating point
 * or series for pi: the value is isolated as a root of the Chebyshev
 * polynomial U_{n-1} and bisected to width 2^-bits.
 */
IntervalValue cos_pi_interval(long j, long n, int bits);
IntervalValue sin_pi_interval(long j, long n, int bits);

IntervalValue to_interval(const GoldenScalar& x, int precision_bits);
/// Real and imaginary parts of a cyclotomic element.
IntervalValue to_interval_real(const CycloScalar& x, int precision_bits);
IntervalValue to_interval_imag(const CycloScalar& x, int precision_bits);

/// Intersection of two enclosures of the same value; never wider than either.
IntervalValue refine(const IntervalValue& coarse, const IntervalValue& fine);

}  // namespace hypcy
