#pragma once

#include <vector>

#include "hypcy/complex/quotient.hpp"

namespace hypcy {

class FaceLattice;

/// Closure of the given simplices (vertex lists) as a regular complex.
RegularComplex simplicial_complex(const std::vector<std::vector<int>>& simplices);

/// One vertex, one edge.
CwComplex circle_cw();

/// The unit square with opposite edges identified by translations.
QuotientSpec torus_square();

/// n x n grid of squares on the torus (n >= 3, so the complex is regular).
RegularComplex torus_grid(int n);
/// Translation of torus_grid(n) by (dx, dy) squares.
CellPerm torus_translation(int n, int dx, int dy);

/**
 * Two copies of a polytope P glued by the identity along the boundary:
 * top cells P+ and P- with d(P-) = -d(P+). Cells of dimension <= dim-2 are
 * listed under labels["singular"].
 */
CwComplex double_polytope(const RegularComplex& P);
CwComplex double_polytope(const FaceLattice& L);

}  // namespace hypcy
