#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypcy/complex/cw.hpp"

namespace hypcy {

class FaceLattice;

/**
 * Face poset of a regular CW complex (a polytope together with its top cell,
 * a polygon, ...), with incidence numbers chosen so that dd = 0.
 *
 * Edges are oriented from the lower-numbered vertex to the higher one; a
 * higher cell takes the orientation that makes its first facet positive.
 */
class RegularComplex {
public:
    /// faces[k][c] lists the (k-1)-faces of cell c; orientation is computed here.
    explicit RegularComplex(std::vector<std::vector<std::vector<int>>> faces);

    int dim() const { return static_cast<int>(faces_.size()) - 1; }
    int count(int k) const { return k >= 0 && k <= dim() ? static_cast<int>(faces_[k].size()) : 0; }
    const std::vector<int>& faces(int k, int c) const { return faces_[k][c]; }
    const std::vector<int>& cofaces(int k, int c) const { return cofaces_[k][c]; }
    /// [c : f] in {-1, 0, +1}.
    int incidence(int k, int c, int f) const;
    /// All cells in the closure of c, by dimension (c itself included).
    std::vector<std::vector<int>> closure(int k, int c) const;
    /// Whether x (of dimension kx) lies in the closure of c.
    bool in_closure(int kx, int x, int k, int c) const;

    CwComplex cw() const;

private:
    void orient();
    std::vector<std::vector<std::vector<int>>> faces_;
    std::vector<std::vector<std::vector<int>>> cofaces_;
    std::vector<std::vector<std::vector<int>>> signs_;  // parallel to faces_
};

/// A map on cells, per dimension; -1 marks cells where it is undefined.
struct CellPerm {
    std::vector<std::vector<int>> image;

    int operator()(int k, int c) const { return image[k][c]; }
    static CellPerm identity(const RegularComplex& X);
    /// (this o other)
    CellPerm compose(const CellPerm& other) const;
    CellPerm inverse() const;
    bool defined_on_closure(const RegularComplex& X, int k, int c) const;
};

/**
 * Orientation sign of phi on cell c: phi_*[c] = sign * [phi(c)]. Computed
 * through the first facet; phi must be defined on the closure of c.
 */
int cell_sign(const RegularComplex& X, const CellPerm& phi, int k, int c);

/**
 * Checks that phi preserves incidence on the closure of every cell where it
 * is defined and that cell_sign is consistent through every facet.
 */
bool check_cell_morphism(const RegularComplex& X, const CellPerm& phi, std::string* witness = nullptr);

/// The oriented face poset of a coset lattice (top cell included).
RegularComplex regular_complex(const FaceLattice& L);

/// Left multiplication by a group element, as a map on lattice cells.
CellPerm lattice_action(const FaceLattice& L, unsigned g);

}  // namespace hypcy
