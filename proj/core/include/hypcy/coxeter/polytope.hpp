#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypcy/coxeter/group.hpp"

namespace hypcy {

/**
 * Face lattice of a regular polytope {p,q,...} built from parabolic cosets.
 *
 * A k-cell is a left coset x W_k where W_k omits generator k. The single
 * top cell (dimension = rank) is the whole group. Cells of each dimension are
 * numbered by the least group element in the coset.
 */
class FaceLattice {
public:
    using Elem = ReflectionGroup::Elem;

    int dim() const { return dim_; }
    const ReflectionGroup& group() const { return *group_; }
    std::shared_ptr<const ReflectionGroup> group_ptr() const { return group_; }

    int count(int k) const { return static_cast<int>(reps_[k].size()); }
    /// f-vector over the proper cells, dimensions 0..dim-1.
    std::vector<int> fvector() const;

    /// Least element of the coset.
    Elem rep(int k, int cell) const { return reps_[k][cell]; }
    /// Generators of the stabilizer of the fundamental k-cell.
    std::vector<int> stabilizer_generators(int k) const;
    /// The k-cell containing group element x.
    int cell_of(int k, Elem x) const { return cell_of_[k][x]; }

    const std::vector<int>& faces(int k, int cell) const { return faces_[k][cell]; }
    const std::vector<int>& cofaces(int k, int cell) const { return cofaces_[k][cell]; }
    bool incident(int k, int cell, int face) const;

    /// Image of a k-cell under left multiplication by g.
    int act(Elem g, int k, int cell) const;
    Elem act_elem(Elem g, Elem x) const;

    /// All k-cells contained in the given cell (k < dim of cell), sorted.
    std::vector<int> subcells(int dim_cell, int cell, int k) const;

    static std::string cell_id(int k, int cell);
    nlohmann::json to_json() const;

    friend FaceLattice build_polytope(std::shared_ptr<const ReflectionGroup> g);

private:
    int dim_ = 0;
    std::shared_ptr<const ReflectionGroup> group_;
    std::vector<std::vector<Elem>> reps_;
    std::vector<std::vector<int>> cell_of_;
    std::vector<std::vector<std::vector<int>>> faces_;
    std::vector<std::vector<std::vector<int>>> cofaces_;
};

/// Wythoff construction for a linear diagram with the first node ringed.
FaceLattice build_polytope(std::shared_ptr<const ReflectionGroup> g);

/**
 * The 120-cell from the order-14400 [5,3,3] group. Verifies the f-vector,
 * the 3/4 incidence degrees and the diamond property; throws on mismatch.
 */
FaceLattice build_120cell(std::shared_ptr<const ReflectionGroup> g);

/// For each `low`-cell, the number of `high`-cells containing it.
std::vector<int> incidence_degrees(const FaceLattice& L, int low, int high);

/// Every (k-2)-face of a k-cell lies in exactly two (k-1)-faces of it.
bool diamond_property(const FaceLattice& L, std::string* witness = nullptr);

}  // namespace hypcy
