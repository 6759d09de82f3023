#pragma once

#include <vector>

#include "hypcy/complex/quotient.hpp"

namespace hypcy {

class FaceLattice;

/// Ordered simplicial (Delta) complex whose k-simplices are chains
/// c_0 < ... < c_k of cells, vertices ordered by cell dimension.
struct FlagComplex {
    CwComplex cw;
    /// Representative chain of each simplex, cells encoded as (dim, index) pairs flattened.
    std::vector<std::vector<std::vector<std::pair<int, int>>>> chains;
};

/// Barycentric subdivision of a regular complex.
FlagComplex barycentric_subdivision(const RegularComplex& X);
FlagComplex barycentric_subdivision(const FaceLattice& L);

/**
 * Barycentric subdivision of a glued complex: chains of the base complex
 * modulo the gluings. When `extra` is given, chains are further identified
 * with their images under that automorphism (the quotient by the group it
 * generates); it must commute with the gluing groupoid.
 */
FlagComplex subdivided_quotient(const QuotientComplex& q, const CellPerm* extra = nullptr);

}  // namespace hypcy
