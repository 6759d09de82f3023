#pragma once

#include <vector>

#include "hypcy/homology/intmatrix.hpp"

namespace hypcy {

struct SnfResult {
    IntMatrix U, D, V;  // U * A * V == D
    /// Nonzero diagonal entries of D, in order.
    std::vector<Integer> invariant_factors() const;
    int rank() const { return static_cast<int>(invariant_factors().size()); }
};

/**
 * Smith normal form by smallest-pivot elimination. Runs in checked 64-bit
 * arithmetic and restarts with GMP integers if any intermediate overflows.
 * The identity U*A*V == D is re-verified before returning; a mismatch throws
 * std::logic_error.
 */
SnfResult smith_normal_form(const IntMatrix& A);

/// Whether the last call on this thread needed the big-integer path.
bool last_snf_used_bigint();

/// Invariant factors only (no transforms); uses sparse unit-pivot
/// elimination first, then a verified dense SNF on what is left.
std::vector<Integer> invariant_factors(const IntMatrix& A);

/// Rank over GF(2).
int rank_mod2(const IntMatrix& A);

}  // namespace hypcy
