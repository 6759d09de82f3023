#pragma once

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypcy/coxeter/polytope.hpp"

namespace hypcy {

/**
 * The 120-cell as the union of the 14400 simplices around one vertex of the
 * [5,3,3,5] tiling of H^4. Facet normals are the orbit of the last simple
 * root under the [5,3,3] parabolic subgroup.
 */
struct HyperbolicRealization {
    std::shared_ptr<const GramMatrix> gram;        // [5,3,3,5]
    std::shared_ptr<const ReflectionGroup> group;  // <s0..s3> acting on R^{4,1}
    Signature ambient_signature;
    std::vector<NormalBasisVector> normals;        // one per 3-cell
    std::vector<GoldenScalar> center;              // fixed by the parabolic, timelike
    std::vector<std::vector<GoldenScalar>> facet_centers;
    int adjacent_pairs = 0;
    int separated_pairs = 0;  // non-adjacent pairs with <n_i, n_j> <= -1
};

HyperbolicRealization realize_hyperbolic(const FaceLattice& lattice);

struct FacePair {
    int facet = 0;
    int partner = 0;
    ReflectionGroup::Elem element = 0;  // the pairing reflection as a group element
    LorentzMatrix isometry;
};

struct FacePairing {
    std::vector<FacePair> pairs;             // facet < partner
    std::vector<int> partner;                // per facet
    std::vector<ReflectionGroup::Elem> map;  // per facet: element taking it to its partner
    nlohmann::json to_json() const;
};

/**
 * Pairs each facet F with its antipode -F by the reflection in the
 * hyperplane orthogonal to c_F - c_{-F}. Each reflection is certified to be
 * an isometry, an involution, and a member of the symmetry group.
 */
FacePairing antipodal_pairing(const FaceLattice& lattice, const HyperbolicRealization& real);

}  // namespace hypcy
