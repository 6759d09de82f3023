#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "hypcy/complex/cw.hpp"
#include "hypcy/exact/qmatrix.hpp"
#include "hypcy/homology/intmatrix.hpp"

namespace hypcy {

/// H_k(c; Z) for k = 0..dim. Throws std::invalid_argument if dd != 0.
std::vector<FgAbGroup> homology(const CwComplex& c);

/// dim H_k(c; Z/2).
std::vector<int> homology_mod2(const CwComplex& c);

/// Betti numbers over Q.
std::vector<int> betti_numbers(const std::vector<FgAbGroup>& h);

int euler_characteristic(const CwComplex& c);

/**
 * A basis of H_k(c; Q): cycles completing a basis of the boundaries, chosen
 * greedily in cell order so the result is deterministic.
 */
struct HomologyBasis {
    QMatrix boundaries;  // columns: basis of im d_{k+1}
    QMatrix cycles;      // columns: representatives of a basis of H_k
};
HomologyBasis homology_basis(const CwComplex& c, int k);

/// Matrix of f_* on H_k(.; Q) in the basis of homology_basis(source, k).
QMatrix induced_on_homology(const CellMap& f, int k);

nlohmann::json homology_json(const std::vector<FgAbGroup>& h, int chi);

}  // namespace hypcy
