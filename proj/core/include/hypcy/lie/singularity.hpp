#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypcy/exact/cyclo.hpp"

namespace hypcy {

/// 2x2 matrix over Q(zeta_{2m}).
struct CycloMatrix2 {
    std::array<CycloScalar, 4> e;  // row-major

    static CycloMatrix2 identity(int m);
    static CycloMatrix2 diag(const CycloScalar& a, const CycloScalar& b);
    CycloMatrix2 operator*(const CycloMatrix2& o) const;
    CycloMatrix2 operator-(const CycloMatrix2& o) const;
    CycloScalar det() const;
    bool is_identity() const;
    bool is_scalar_minus_identity() const;
};

/// U = diag(zeta_{2m}, zeta_{2m}^{-1}).
CycloMatrix2 lift_generator(int m);

/// Least k >= 1 with U^k = I; checks det(U^j - I) != 0 for 0 < j < k.
int lift_order(int m);

struct FixedLocus {
    int m = 0;
    std::vector<std::string> free_coords;   // coordinates left unconstrained
    std::vector<std::string> zero_coords;   // forced to vanish
    std::string relation;                   // from det = 1
    std::vector<long> normal_exponents;     // characters zeta_{2m}^e on the normal directions
    std::vector<CycloScalar> normal_weights;
    long weight_order = 0;                  // order of the group the weights generate
    long u2_order = 0;                      // order of U^2 as a matrix
    long u2_projective_order = 0;           // order of U^2 modulo -I
    bool weights_are_u2_eigenvalues = false;

    nlohmann::json to_json() const;
};

/// Fixed points of (x, y, z, w) -> (x, zeta^{-2} y, zeta^2 z, w) on SL(2, C), zeta = zeta_{2m}.
FixedLocus model_fixed_locus(int m);

struct IdentityCheck {
    int samples = 0;
    int passed = 0;
    std::string first_failure;
    bool ok() const { return passed == samples && first_failure.empty(); }
};

/// Hamilton quaternion with rational components 1, i, j, k.
struct Quaternion {
    Rational a, b, c, d;
    Quaternion operator*(const Quaternion& o) const;
    Quaternion conj() const { return {a, -b, -c, -d}; }
    /// q * conj(q); throws if the result is not real.
    Rational norm() const;
};

/// w1 + j w2 for complex w1 = (re, im), w2 = (re, im).
Quaternion quaternion_of(const Rational& re1, const Rational& im1, const Rational& re2, const Rational& im2);

/// h(w) = |w1|^2 + |w2|^2 - |w3|^2 - |w4|^2 against |p1|^2 - |p2|^2 of (w1 + j w2, w3 + j w4).
IdentityCheck quaternion_hermitian_check(int samples, std::uint64_t seed);

struct ConifoldCheck {
    bool first_on_cone = false;      // (l1 s, l1 t, l2 s, l2 t)
    bool second_on_cone = false;     // (l1 s, l2 s, l1 t, l2 t)
    bool first_ruling = false;       // [x:y] = [z:w] = [s:t]
    bool second_ruling = false;      // [x:z] = [y:w] = [s:t]
    bool rulings_differ = false;     // neither identification satisfies the other's ruling
    std::string witness;             // non-proportional pair off the cone
    IdentityCheck samples;
    bool ok() const {
        return first_on_cone && second_on_cone && first_ruling && second_ruling && rulings_differ && !witness.empty() &&
               samples.ok();
    }
};

ConifoldCheck conifold_incidence_check(int samples = 1000, std::uint64_t seed = 1);

}  // namespace hypcy
