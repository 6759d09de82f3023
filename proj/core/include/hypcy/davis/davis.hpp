#pragma once

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypcy/complex/quotient.hpp"
#include "hypcy/complex/subdivision.hpp"
#include "hypcy/coxeter/hyperbolic.hpp"
#include "hypcy/exact/qmatrix.hpp"

namespace hypcy {

/// Everything needed to talk about the Davis manifold M and its involution.
struct DavisModel {
    std::shared_ptr<const ReflectionGroup> group;  // [5,3,3]
    std::shared_ptr<const FaceLattice> lattice;
    HyperbolicRealization realization;
    FacePairing pairing;
    std::shared_ptr<const RegularComplex> polytope;
    std::shared_ptr<const QuotientComplex> quotient;
    ReflectionGroup::Elem sigma_element = 0;  // central element of [5,3,3]
    CellPerm sigma;
};

DavisModel build_davis_model(std::size_t max_order = 20000);

/// Gluing data for the quotient: each facet to its antipode.
QuotientSpec davis_spec(const FaceLattice& L, const FacePairing& P, std::shared_ptr<const RegularComplex> X);

/// Rational cohomology of a space, degree by degree, with an endomorphism.
struct GradedAction {
    std::vector<int> dims;
    std::vector<QMatrix> action;  // action[k] is dims[k] x dims[k]
};

/**
 * dim H^3 of the resolution, invariant part: the sphere-bundle model
 * contributes H^3(M) + H^1(M) u with u invariant of degree 2, and the
 * blow-up correction is H^*(C) times generators of degree 2, where C is
 * the blow-up locus with Betti numbers center_betti.
 */
int b3_of_resolution(const GradedAction& h_m, const std::vector<int>& center_betti = {1, 0, 1});

enum class KahlerVerdict { Obstructed, Inconclusive };
KahlerVerdict kahler_obstruction(int b1, int b3);
std::string to_string(KahlerVerdict v);

struct DavisReport {
    std::vector<int> orbit_counts;
    int chi = 0;
    std::vector<FgAbGroup> homology;
    std::vector<int> homology_mod2;
    std::vector<FgAbGroup> subdivision_homology;
    std::vector<int> subdivision_counts;
    FixedStrataReport fixed_points;
    int sigma_order = 0;
    bool sigma_minus_identity_on_h1 = false;
    int sigma_h1_trace = 0;
    std::vector<int> sigma_traces;   // on H_k(M;Q)
    int lefschetz_cellular = 0;
    int lefschetz_homological = 0;
    FgAbGroup quotient_h1;
    std::vector<FgAbGroup> quotient_homology;
    FgAbGroup loop_quotient;  // Z^60 / im d_3^T, generated by the 60 deck loops
    int b3_hat = -1;
    KahlerVerdict verdict = KahlerVerdict::Inconclusive;
    int adjacent_facet_pairs = 0;
    int separated_facet_pairs = 0;
    int pairs = 0;

    nlohmann::json to_json() const;
};

DavisReport run_davis_pipeline(const DavisModel& model);
inline DavisReport run_davis_pipeline() { return run_davis_pipeline(build_davis_model()); }

}  // namespace hypcy
