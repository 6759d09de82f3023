#pragma once

// Rationals are GMP's mpq_class: always canonical (coprime, positive
// denominator), arbitrary size.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <string>

namespace hypcy {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::size_t hash_value(const Integer& z) {
    // Low limb plus size is plenty for the small values used as keys.
    std::size_t h = std::hash<long>{}(mpz_size(z.get_mpz_t()) ? static_cast<long>(mpz_getlimbn(z.get_mpz_t(), 0)) : 0L);
    return h ^ (static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1) * 0x9e3779b97f4a7c15ULL);
}

inline std::size_t hash_value(const Rational& q) {
    std::size_t h = hash_value(q.get_num());
    h ^= hash_value(q.get_den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

inline void hash_combine(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

/// Exact sign of a rational: -1, 0 or +1.
inline int sign(const Rational& q) { return sgn(q); }

}  // namespace hypcy
