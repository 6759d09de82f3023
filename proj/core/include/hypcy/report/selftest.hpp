#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hypcy/report/pipelines.hpp"

namespace hypcy {

struct Criterion {
    int id = 0;
    std::string title;
    Report report;
    double seconds = 0;
    bool passed() const { return report.ok() && !report.checks.empty(); }
    /// "criterion  4 PASS  davis complex (12/12 checks, 4.1 s)"
    std::string line() const;
};

struct AcceptanceRun {
    std::vector<Criterion> criteria;
    double seconds = 0;
    bool passed() const;
    /// All checks, prefixed "c01/", "c02/", ...; no timings.
    Report combined() const;
};

/**
 * Runs acceptance criteria 1..11 in order. The Davis model is built once and
 * shared by criteria 1 to 6. on_done is called after each criterion.
 * Exceptions inside a criterion become failed checks.
 */
AcceptanceRun run_acceptance(const PipelineOptions& o = {},
                             const std::function<void(const Criterion&)>& on_done = {});

}  // namespace hypcy
