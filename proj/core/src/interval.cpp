#include "hypcy/exact/interval.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace hypcy {

namespace {

Integer pow2(int k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(k));
    return r;
}

Rational floor_dyadic(const Rational& q, int bits) {
    Integer scaled = q.get_num() * pow2(bits);
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
    Rational r(f, pow2(bits));
    r.canonicalize();
    return r;
}

Rational ceil_dyadic(const Rational& q, int bits) {
    Integer scaled = q.get_num() * pow2(bits);
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
    Rational r(c, pow2(bits));
    r.canonicalize();
    return r;
}

int bit_size(const Rational& q) {
    Rational a = abs(q);
    if (a <= 1) return 0;
    return static_cast<int>(mpz_sizeinbase(a.get_num().get_mpz_t(), 2) - mpz_sizeinbase(a.get_den().get_mpz_t(), 2)) + 1;
}

// U_k(x) by the three-term recurrence.
Rational chebyshev_u(long k, const Rational& x) {
    if (k == 0) return 1;
    Rational prev = 1;
    Rational cur = 2 * x;
    for (long i = 1; i < k; ++i) {
        Rational next = 2 * x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

struct Bracket {
    Rational lo, hi;  // root in [lo, hi]; exact when lo == hi
};

// Brackets for the n-1 roots of U_{n-1} in decreasing order, i.e. the k-th
// entry encloses cos(pi*k/n). Cached per n.
const std::vector<Bracket>& chebyshev_brackets(long n) {
    static std::mutex mu;
    static std::map<long, std::vector<Bracket>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    const long want = n - 1;
    for (int g = 2;; ++g) {
        const long cells = 1L << g;
        std::vector<Bracket> found;
        // walk grid from x = 1 down to x = -1 (exclusive of the endpoints,
        // which are never roots)
        Rational step(2, cells);
        step.canonicalize();
        Rational prev_x = 1;
        int prev_sign = sgn(chebyshev_u(n - 1, prev_x));
        for (long i = 1; i < cells; ++i) {
            Rational x = Rational(1) - step * i;
            int s = sgn(chebyshev_u(n - 1, x));
            if (s == 0) {
                found.push_back({x, x});
                // skip over the exact root; the next cell compares against it
                prev_x = x;
                prev_sign = 0;
                continue;
            }
            if (prev_sign != 0 && s != prev_sign) found.push_back({x, prev_x});
            prev_x = x;
            prev_sign = s;
        }
        Rational x = -1;
        int s = sgn(chebyshev_u(n - 1, x));
        if (prev_sign != 0 && s != prev_sign) found.push_back({x, prev_x});
        if (static_cast<long>(found.size()) == want) return cache.emplace(n, std::move(found)).first->second;
        if (g > 30) throw std::logic_error("cos_pi_interval: root isolation failed");
    }
}

IntervalValue point(const Rational& q, int bits) { return {q, q, bits}; }

IntervalValue add(const IntervalValue& x, const IntervalValue& y) {
    return {x.lo + y.lo, x.hi + y.hi, std::min(x.precision_bits, y.precision_bits)};
}

IntervalValue scale(const IntervalValue& x, const Rational& c) {
    if (sgn(c) >= 0) return {x.lo * c, x.hi * c, x.precision_bits};
    return {x.hi * c, x.lo * c, x.precision_bits};
}

IntervalValue round_out(const IntervalValue& x, int bits) {
    return {floor_dyadic(x.lo, bits), ceil_dyadic(x.hi, bits), bits};
}

}  // namespace

std::string IntervalValue::to_string() const { return "[" + lo.get_str() + ", " + hi.get_str() + "]"; }

IntervalValue sqrt5_interval(int bits) {
    Integer n = 5 * pow2(2 * bits);
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    Rational lo(r, pow2(bits));
    lo.canonicalize();
    if (r * r == n) return {lo, lo, bits};
    Rational hi(r + 1, pow2(bits));
    hi.canonicalize();
    return {lo, hi, bits};
}

IntervalValue cos_pi_interval(long j, long n, int bits) {
    if (n <= 0) throw std::invalid_argument("cos_pi_interval: n must be positive");
    const long two_n = 2 * n;
    j = ((j % two_n) + two_n) % two_n;
    if (j > n) j = two_n - j;
    long g = std::gcd(j, n);
    long a = j / g;
    long b = n / g;
    if (a == 0) return point(1, bits);
    if (a == b) return point(-1, bits);
    if (b == 2) return point(0, bits);
    if (b == 3) return point(Rational(a == 1 ? 1 : -1, 2), bits);

    const Bracket& br = chebyshev_brackets(b)[a - 1];
    Rational lo = br.lo, hi = br.hi;
    if (lo == hi) return point(lo, bits);
    const long k = b - 1;
    int s_lo = sgn(chebyshev_u(k, lo));
    Rational eps(1);
    eps /= Rational(pow2(bits));
    while (hi - lo > eps) {
        Rational mid = (lo + hi) / 2;
        int s = sgn(chebyshev_u(k, mid));
        if (s == 0) return point(mid, bits);
        if (s == s_lo) lo = mid;
        else hi = mid;
    }
    return {lo, hi, bits};
}

IntervalValue sin_pi_interval(long j, long n, int bits) {
    // sin(pi j/n) = cos(pi (n - 2j) / (2n))
    return cos_pi_interval(n - 2 * j, 2 * n, bits);
}

IntervalValue to_interval(const GoldenScalar& x, int precision_bits) {
    if (precision_bits < 8) throw std::invalid_argument("to_interval: precision_bits must be >= 8");
    if (x.is_rational()) {
        const Rational& a = x.rational_part();
        return {floor_dyadic(a, precision_bits), ceil_dyadic(a, precision_bits), precision_bits};
    }
    // a + b*phi = (a + b/2) + (b/2)*sqrt5
    const Rational s = x.rational_part() + x.phi_part() / 2;
    const Rational t = x.phi_part() / 2;
    const int inner = precision_bits + bit_size(t) + 2;
    IntervalValue v = add(point(s, inner), scale(sqrt5_interval(inner), t));
    return round_out(v, precision_bits);
}

namespace {

IntervalValue cyclo_part(const CycloScalar& x, int precision_bits, bool imag) {
    if (precision_bits < 8) throw std::invalid_argument("to_interval: precision_bits must be >= 8");
    Rational total_mag = 0;
    for (const auto& c : x.coeffs()) total_mag += abs(c);
    int inner = precision_bits + bit_size(total_mag) + 4;
    IntervalValue acc = point(0, inner);
    const auto& cs = x.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (sgn(cs[i]) == 0) continue;
        IntervalValue t = imag ? sin_pi_interval(static_cast<long>(i), x.m(), inner)
                               : cos_pi_interval(static_cast<long>(i), x.m(), inner);
        acc = add(acc, scale(t, cs[i]));
    }
    return round_out(acc, precision_bits);
}

}  // namespace

IntervalValue to_interval_real(const CycloScalar& x, int precision_bits) { return cyclo_part(x, precision_bits, false); }

IntervalValue to_interval_imag(const CycloScalar& x, int precision_bits) { return cyclo_part(x, precision_bits, true); }

IntervalValue refine(const IntervalValue& coarse, const IntervalValue& fine) {
    IntervalValue r{std::max(coarse.lo, fine.lo), std::min(coarse.hi, fine.hi),
                    std::max(coarse.precision_bits, fine.precision_bits)};
    if (r.lo > r.hi) throw std::logic_error("refine: disjoint enclosures " + coarse.to_string() + " and " + fine.to_string());
    return r;
}

}  // namespace hypcy
