#include "hypcy/report/selftest.hpp"

#include <chrono>
#include <cstdio>
#include <memory>
#include <optional>
#include <stdexcept>

namespace hypcy {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

}  // namespace

std::string Criterion::line() const {
    char buf[256];
    std::snprintf(buf, sizeof buf, "criterion %2d %s  %s (%d/%zu checks, %.1f s)", id, passed() ? "PASS" : "FAIL",
                  title.c_str(), report.passed(), report.checks.size(), seconds);
    return buf;
}

bool AcceptanceRun::passed() const {
    for (const auto& c : criteria)
        if (!c.passed()) return false;
    return criteria.size() == 11;
}

Report AcceptanceRun::combined() const {
    Report r("selftest");
    for (const auto& c : criteria) {
        char prefix[8];
        std::snprintf(prefix, sizeof prefix, "c%02d", c.id);
        r.merge(c.report, prefix);
        r.results["criteria"].push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed()}});
    }
    return r;
}

AcceptanceRun run_acceptance(const PipelineOptions& o, const std::function<void(const Criterion&)>& on_done) {
    AcceptanceRun run;
    const auto start = Clock::now();

    auto criterion = [&](int id, const std::string& title, const std::function<void(Report&)>& body) {
        Criterion c;
        c.id = id;
        c.title = title;
        c.report.command = "selftest";
        const auto t = Clock::now();
        try {
            body(c.report);
        } catch (const std::exception& e) {
            c.report.error("criterion " + std::to_string(id), e.what(), Provenance::Derived);
        }
        c.seconds = since(t);
        run.criteria.push_back(std::move(c));
        if (on_done) on_done(run.criteria.back());
    };

    std::shared_ptr<ReflectionGroup> group;
    std::optional<DavisModel> model;
    std::optional<DavisReport> davis;

    criterion(1, "Coxeter group [5,3,3]", [&](Report& r) {
        const auto t = Clock::now();
        group = std::make_shared<ReflectionGroup>(generate_group(CoxeterDiagram::linear({5, 3, 3}), o.max_order));
        group_checks(r, *group, since(t));
    });
    criterion(2, "120-cell face lattice", [&](Report& r) {
        model = build_davis_model(o.max_order);
        polytope_checks(r, *model->lattice);
    });
    criterion(3, "hyperbolic realization", [&](Report& r) {
        if (!model) throw std::runtime_error("no Davis model (criterion 2 failed)");
        realization_checks(r, *model->lattice, model->realization, o.precision);
    });
    criterion(4, "Davis complex", [&](Report& r) {
        if (!model) throw std::runtime_error("no Davis model (criterion 2 failed)");
        davis = run_davis_pipeline(*model);
        davis_structure_checks(r, *model, *davis);
    });
    criterion(5, "involution", [&](Report& r) {
        if (!davis) throw std::runtime_error("no Davis report (criterion 4 failed)");
        davis_involution_checks(r, *davis);
    });
    criterion(6, "b3 bookkeeping", [&](Report& r) {
        if (!davis) throw std::runtime_error("no Davis report (criterion 4 failed)");
        davis_b3_checks(r, *davis);
    });
    model.reset();
    davis.reset();
    criterion(7, "Lie suite n = 1..6", [&](Report& r) {
        const auto t = Clock::now();
        for (int n = 1; n <= 6; ++n) {
            lie_decompose_checks(r, n);
            lie_forms_checks(r, n);
        }
        const double s = since(t);
        r.require("runtime under 5 s", s < 5.0, "< 5 s", s < 5.0 ? "within bound" : std::to_string(s) + " s",
                  Provenance::Trivial);
    });
    criterion(8, "Chern suite", [&](Report& r) {
        for (int n = 1; n <= 6; ++n) twistor_checks(r, n);
        resolution_checks(r);
    });
    criterion(9, "singularity suite", [&](Report& r) {
        for (int m : {2, 3, 4, 5, 8}) lift_order_checks(r, m);
        for (int m : {2, 3, 4, 5, 8}) fixed_locus_checks(r, m, o.precision);
        identity_sample_checks(r, o.seed, 1000);
    });
    criterion(10, "sequence suite", [&](Report& r) {
        orbifold_checks(r);
        knot_threefold_checks(r);
        wall_example_checks(r);
    });
    criterion(11, "property suites", [&](Report& r) {
        property_checks(r, run_property_suites(o.seed));
        const double s = since(start);
        r.require("selftest under 5 minutes", s < 300.0, "< 300 s", s < 300.0 ? "within bound" : std::to_string(s) + " s",
                  Provenance::Trivial);
    });
    run.seconds = since(start);
    return run;
}

}  // namespace hypcy
