#include "hypcy/exact/golden.hpp"

#include <ostream>
#include <stdexcept>

#include "hypcy/exact/interval.hpp"

namespace hypcy {

GoldenScalar GoldenScalar::inverse() const {
    Rational n = norm();
    if (sgn(n) == 0) throw std::domain_error("GoldenScalar: inverse of zero");
    GoldenScalar c = conj();
    return {c.a_ / n, c.b_ / n};
}

GoldenScalar& GoldenScalar::operator+=(const GoldenScalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

GoldenScalar& GoldenScalar::operator-=(const GoldenScalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

GoldenScalar operator*(const GoldenScalar& x, const GoldenScalar& y) {
    // phi^2 = phi + 1
    Rational bd = x.b_ * y.b_;
    return {x.a_ * y.a_ + bd, x.a_ * y.b_ + x.b_ * y.a_ + bd};
}

GoldenScalar& GoldenScalar::operator*=(const GoldenScalar& o) { return *this = *this * o; }

GoldenScalar& GoldenScalar::operator/=(const GoldenScalar& o) { return *this = *this * o.inverse(); }

double GoldenScalar::to_double() const {
    const double phi = 1.6180339887498948482;
    return a_.get_d() + b_.get_d() * phi;
}

std::string GoldenScalar::to_string() const { return a_.get_str() + " + " + b_.get_str() + "*phi"; }

std::size_t GoldenScalar::hash() const {
    std::size_t h = hash_value(a_);
    hash_combine(h, hash_value(b_));
    return h;
}

GoldenScalar golden_mul(const GoldenScalar& x, const GoldenScalar& y) { return x * y; }

int golden_sign(const GoldenScalar& x) {
    if (x.is_zero()) return 0;
    if (x.is_rational()) return sgn(x.rational_part());

    IntervalValue iv = to_interval(x, 64);
    if (sgn(iv.lo) > 0) return 1;
    if (sgn(iv.hi) < 0) return -1;

    // x = s + t*sqrt5 with s = a + b/2, t = b/2.
    const Rational s = x.rational_part() + x.phi_part() / 2;
    const Rational t = x.phi_part() / 2;
    const int ss = sgn(s);
    const int st = sgn(t);
    if (ss == 0) return st;
    if (ss == st) return ss;
    return (s * s > 5 * t * t) ? ss : st;
}

std::ostream& operator<<(std::ostream& os, const GoldenScalar& x) { return os << x.to_string(); }

}  // namespace hypcy
