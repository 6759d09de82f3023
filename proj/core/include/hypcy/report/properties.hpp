#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypcy/complex/regular.hpp"
#include "hypcy/exact/cyclo.hpp"
#include "hypcy/exact/golden.hpp"
#include "hypcy/homology/intmatrix.hpp"

namespace hypcy {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct PropertyResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    nlohmann::json first_failure;  // null when every case passed
    bool ok() const { return failures == 0; }
};

/// Random generators shared by the property suites and the unit tests.
struct RandomSource {
    std::mt19937_64 rng;
    explicit RandomSource(std::uint64_t seed) : rng(seed) {}

    int uniform(int lo, int hi);  // inclusive
    Rational rational(int max_num = 20, int max_den = 7);
    GoldenScalar golden();
    CycloScalar cyclo(int m);
    IntMatrix int_matrix(int rows, int cols, int max_entry = 9, int percent_zero = 40);
    /// Closure of a few random simplices on at most max_vertices vertices,
    /// relabelled so the vertices are 0..v-1.
    std::vector<std::vector<int>> simplices(int max_vertices = 7, int max_dim = 3);
    std::vector<int> permutation(int n);
};

PropertyResult field_axioms_rational(RandomSource& r, int cases);
PropertyResult field_axioms_golden(RandomSource& r, int cases);
PropertyResult field_axioms_cyclotomic(RandomSource& r, int cases);
/// U A V = D, D a divisibility chain, U and V unimodular, and agreement
/// with invariant_factors and rank_mod2.
PropertyResult snf_reverification(RandomSource& r, int cases);
/// dd = 0 on random simplicial complexes and their subdivisions.
PropertyResult boundary_squared_zero(RandomSource& r, int cases);
/// H_*(X) = H_*(sd X) on random simplicial complexes.
PropertyResult subdivision_homology(RandomSource& r, int cases);
/// (fg)_* = f_* g_* for vertex permutations of simplex boundaries and for
/// torus translations, checked on chains and on homology.
PropertyResult chain_map_functoriality(RandomSource& r, int cases);

/// Every suite with the default case counts (11100 cases in total).
std::vector<PropertyResult> run_property_suites(std::uint64_t seed = kDefaultSeed);

/// The cell map on simplicial_complex(simplices) induced by a vertex
/// permutation; throws if the complex is not invariant.
CellPerm vertex_permutation_map(const RegularComplex& X, const std::vector<int>& perm);

}  // namespace hypcy
