#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypcy/seq/sequence.hpp"

namespace hypcy {

/// H_0..H_top of a space, one group per degree.
using GradedGroups = std::vector<FgAbGroup>;

struct ModelHomology {
    SequenceProblem problem;
    SolveResult result;
    GradedGroups homology;  // H_0.. of the target space, empty if unsolved
    std::vector<std::string> checks_failed;
    bool ok() const { return result.status == SolveResult::Status::Solved && checks_failed.empty(); }
    nlohmann::json to_json() const;
};

/**
 * Pair sequence of (X, E) for the resolution built from a pi-hyperbolic
 * knot (m = 2): E = P^1 x elliptic curve, relative groups (0,0,Z^2,Z^3,0,0,Z).
 * Geometric inputs enter as named facts. Other m are rejected.
 */
SequenceProblem knot_threefold_problem(int m = 2, bool with_fibre_axiom = true);
ModelHomology knot_threefold_homology(int m = 2);

/// Relative groups H_j(P/Z_m, C) from H_*(S^3 x S^3) and H_*(C) via the pair sequence.
ModelHomology orbifold_relative_homology();

/**
 * Mayer-Vietoris for X_1 u X_2 with X_1 ~ (S^3 - K) x S^3, X_2 ~ S^1 x S^3 and
 * X_1 n X_2 ~ T^2 x S^3, maps induced by the torus projections.
 */
SequenceProblem orbifold_mv_problem();
ModelHomology orbifold_homology_mv();

/// Two 3-balls glued along S^2.
SequenceProblem two_balls_problem();
ModelHomology two_balls_homology();

/// Total space of a module over the base with one generator u of degree d: H^k = B^k + B^{k-d} u.
GradedGroups leray_hirsch_module(const GradedGroups& base, int generator_degree = 2);

struct WallData {
    int b3 = 0;
    FgAbGroup h2;
    std::vector<long> cubic_form;   // b^3 entries, index (i*b + j)*b + k
    std::vector<long> p1_pairing;   // b entries
    bool spin = false;
    bool torsion_free = false;

    /// Throws std::invalid_argument when form sizes do not match rank h2.
    void validate() const;
    static WallData model(int a, int b);  // a(S^3 x S^3) # b(S^2 x S^4)
    nlohmann::json to_json() const;
    static WallData from_json(const nlohmann::json& j);
};

struct WallMatch {
    bool hypotheses_met = false;
    bool matched = false;
    int a = 0, b = 0;
    std::string name;  // model name, "no match" or "hypotheses not met"
    std::string reason;
    nlohmann::json to_json() const;
};

std::string connected_sum_name(int a, int b);
WallMatch wall_match(const WallData& d);

}  // namespace hypcy
