#pragma once

#include <cstddef>
#include <cstdint>

#include <nlohmann/json.hpp>

#include "hypcy/coxeter/hyperbolic.hpp"
#include "hypcy/davis/davis.hpp"
#include "hypcy/report/properties.hpp"
#include "hypcy/report/report.hpp"
#include "hypcy/seq/models.hpp"

namespace hypcy {

struct PipelineOptions {
    std::uint64_t seed = kDefaultSeed;
    int precision = 64;            // bits for interval renderings
    std::size_t max_order = 20000; // group enumeration bound
};

// Check builders. Each appends checks to r; the *_report functions wrap them
// with the command name and results.

void group_checks(Report& r, const ReflectionGroup& g, double seconds);
void polytope_checks(Report& r, const FaceLattice& L);
void realization_checks(Report& r, const FaceLattice& L, const HyperbolicRealization& R, int precision);
void davis_structure_checks(Report& r, const DavisModel& m, const DavisReport& d);
void davis_involution_checks(Report& r, const DavisReport& d);
void davis_b3_checks(Report& r, const DavisReport& d);
void lie_decompose_checks(Report& r, int n);
void lie_forms_checks(Report& r, int n);
void twistor_checks(Report& r, int n);
void resolution_checks(Report& r);
void lift_order_checks(Report& r, int m);
void fixed_locus_checks(Report& r, int m, int precision);
void identity_sample_checks(Report& r, std::uint64_t seed, int samples = 1000);
void knot_threefold_checks(Report& r);
void orbifold_checks(Report& r);
void wall_example_checks(Report& r);
void property_checks(Report& r, const std::vector<PropertyResult>& results);

Report polytope_report(const PipelineOptions& o, bool realize, nlohmann::json* lattice_out = nullptr);
/// The glued complex and the facet pairing, as JSON.
Report davis_build_report(const DavisModel& m, nlohmann::json* model_out = nullptr);
Report davis_homology_report(const DavisModel& m, bool mod2);
Report davis_all_report(const DavisModel& m, const DavisReport& d);
Report lie_decompose_report(int n);
Report lie_forms_report(int n);
Report fixed_locus_report(int m, const PipelineOptions& o);
Report lift_order_report(int m);
Report twistor_report(int n);
Report resolution_check_report();
Report seq_solve_report(const SequenceProblem& p);
Report knot_threefold_report();
Report orbifold_mv_report();
Report wall_match_report(const WallData& d);

}  // namespace hypcy
