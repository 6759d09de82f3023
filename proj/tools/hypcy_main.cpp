// hypcy: command-line front end for the verification pipelines.
//
// Exit codes: 0 all checks pass, 1 some check failed (or a pipeline threw),
// 2 usage error.

#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hypcy/report/pipelines.hpp"
#include "hypcy/report/selftest.hpp"

namespace {

using hypcy::Report;
using nlohmann::json;

struct Globals {
    std::optional<std::string> json_path;  // "" means standard output
    std::uint64_t seed = hypcy::kDefaultSeed;
    int precision = 64;
    std::size_t max_order = 20000;
    bool timestamps = false;

    hypcy::PipelineOptions options() const { return {seed, precision, max_order}; }
};

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

int emit(const Globals& g, const Report& r) {
    json j = r.to_json();
    if (g.timestamps) j["generated_at"] = static_cast<long long>(std::time(nullptr));
    if (g.json_path && g.json_path->empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << r.to_text();
        if (g.json_path) write_json(*g.json_path, j);
    }
    return r.ok() ? 0 : 1;
}

/// Runs a pipeline; an exception becomes a failed check so the exit code
/// and the JSON report still reflect it.
int run(const Globals& g, const std::string& command, const std::function<Report()>& body) {
    Report r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r = Report(command);
        r.error("pipeline", e.what(), hypcy::Provenance::Derived);
    }
    return emit(g, r);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypcy: exact verification of hyperbolic and complex-geometric constructions"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    std::string json_arg;
    auto* json_opt = app.add_option("--json", json_arg, "write the JSON report to PATH (bare: JSON to stdout)")
                         ->expected(0, 1)
                         ->option_text("[PATH]");
    app.add_option("--seed", g.seed, "seed for randomized checks")->capture_default_str();
    app.add_option("--precision", g.precision, "bits for interval enclosures")
        ->check(CLI::Range(8, 4096))
        ->capture_default_str();
    app.add_option("--max-order", g.max_order, "group enumeration bound")->capture_default_str();
    app.add_flag("--timestamps", g.timestamps, "add generation time to JSON output");

    std::function<int()> action;

    // polytope
    auto* polytope = app.add_subcommand("polytope", "regular polytope face lattices")->require_subcommand(1);
    bool realize = false;
    std::string lattice_out;
    auto* p120 = polytope->add_subcommand("120cell", "the 120-cell from [5,3,3]");
    p120->add_flag("--realize", realize, "also build the hyperbolic realization");
    p120->add_option("--out", lattice_out, "write the face lattice to PATH");
    p120->callback([&] {
        action = [&] {
            return run(g, "polytope 120cell", [&] {
                json lattice;
                Report r = hypcy::polytope_report(g.options(), realize, lattice_out.empty() ? nullptr : &lattice);
                if (!lattice_out.empty()) write_json(lattice_out, lattice);
                return r;
            });
        };
    });

    // davis
    auto* davis = app.add_subcommand("davis", "the Davis manifold and its involution")->require_subcommand(1);
    std::string davis_out;
    bool mod2 = false;
    auto* dbuild = davis->add_subcommand("build", "glue the 120-cell");
    dbuild->add_option("--out", davis_out, "write the glued complex to PATH")->required();
    dbuild->callback([&] {
        action = [&] {
            return run(g, "davis build", [&] {
                json model;
                Report r = hypcy::davis_build_report(hypcy::build_davis_model(g.max_order), &model);
                write_json(davis_out, model);
                return r;
            });
        };
    });
    auto* dhom = davis->add_subcommand("homology", "integral homology of the Davis manifold");
    dhom->add_flag("--mod2", mod2, "also Z/2 Betti numbers");
    dhom->callback([&] {
        action = [&] {
            return run(g, "davis homology",
                       [&] { return hypcy::davis_homology_report(hypcy::build_davis_model(g.max_order), mod2); });
        };
    });
    auto* dall = davis->add_subcommand("all", "full pipeline: homology, fixed points, b3");
    dall->callback([&] {
        action = [&] {
            return run(g, "davis all", [&] {
                hypcy::DavisModel m = hypcy::build_davis_model(g.max_order);
                return hypcy::davis_all_report(m, hypcy::run_davis_pipeline(m));
            });
        };
    });

    // lie
    auto* lie = app.add_subcommand("lie", "so(2n,1) at the point xi")->require_subcommand(1);
    int lie_n = 2;
    for (const char* name : {"decompose", "forms"}) {
        auto* sub = lie->add_subcommand(name, std::string(name) == "decompose" ? "tangent space decomposition"
                                                                               : "invariant 2-forms and Kirillov form");
        sub->add_option("--n", lie_n, "half the dimension")->required()->check(CLI::Range(1, 12));
        const bool decompose = std::string(name) == "decompose";
        sub->callback([&, decompose] {
            action = [&, decompose] {
                return run(g, decompose ? "lie decompose" : "lie forms", [&, decompose] {
                    return decompose ? hypcy::lie_decompose_report(lie_n) : hypcy::lie_forms_report(lie_n);
                });
            };
        });
    }

    // singularity
    auto* sing = app.add_subcommand("singularity", "the cyclic action on the quadric")->require_subcommand(1);
    int sing_m = 2;
    auto* fixed = sing->add_subcommand("fixed-locus", "fixed points and normal weights");
    fixed->add_option("--m", sing_m, "order of the action")->required()->check(CLI::Range(2, 1000));
    fixed->callback([&] {
        action = [&] { return run(g, "singularity fixed-locus", [&] { return hypcy::fixed_locus_report(sing_m, g.options()); }); };
    });
    auto* lift = sing->add_subcommand("lift-order", "order of the lifted action");
    lift->add_option("--m", sing_m, "order of the action")->required()->check(CLI::Range(2, 1000));
    lift->callback([&] {
        action = [&] { return run(g, "singularity lift-order", [&] { return hypcy::lift_order_report(sing_m); }); };
    });

    // chern
    auto* chern = app.add_subcommand("chern", "characteristic classes")->require_subcommand(1);
    int chern_n = 2;
    auto* twistor = chern->add_subcommand("twistor", "c1 of the twistor space");
    twistor->add_option("--n", chern_n, "half the dimension of the base")->required()->check(CLI::Range(1, 64));
    twistor->callback([&] {
        action = [&] { return run(g, "chern twistor", [&] { return hypcy::twistor_report(chern_n); }); };
    });
    chern->add_subcommand("resolution-check", "Chern numbers on the exceptional divisor")->callback([&] {
        action = [&] { return run(g, "chern resolution-check", [] { return hypcy::resolution_check_report(); }); };
    });

    // seq
    auto* seq = app.add_subcommand("seq", "exact sequence deductions")->require_subcommand(1);
    std::string problem_path;
    auto* solve = seq->add_subcommand("solve", "solve a problem file");
    solve->add_option("problem", problem_path, "problem JSON")->required()->check(CLI::ExistingFile);
    solve->callback([&] {
        action = [&] {
            return run(g, "seq solve", [&] {
                return hypcy::seq_solve_report(hypcy::SequenceProblem::from_json(read_json(problem_path)));
            });
        };
    });
    seq->add_subcommand("knot-threefold", "homology of the knot resolution")->callback([&] {
        action = [&] { return run(g, "seq knot-threefold", [] { return hypcy::knot_threefold_report(); }); };
    });
    seq->add_subcommand("orbifold-mv", "Mayer-Vietoris for the orbifold cover")->callback([&] {
        action = [&] { return run(g, "seq orbifold-mv", [] { return hypcy::orbifold_mv_report(); }); };
    });

    // wall
    auto* wall = app.add_subcommand("wall", "Wall's classification")->require_subcommand(1);
    std::string wall_path;
    auto* match = wall->add_subcommand("match", "match invariants against connected sums");
    match->add_option("data", wall_path, "invariants JSON")->required()->check(CLI::ExistingFile);
    match->callback([&] {
        action = [&] {
            return run(g, "wall match", [&] { return hypcy::wall_match_report(hypcy::WallData::from_json(read_json(wall_path))); });
        };
    });

    // selftest
    app.add_subcommand("selftest", "run every acceptance criterion")->callback([&] {
        action = [&] {
            hypcy::AcceptanceRun res = hypcy::run_acceptance(g.options(), [&](const hypcy::Criterion& c) {
                if (!(g.json_path && g.json_path->empty())) std::cout << c.line() << std::endl;
            });
            Report r = res.combined();
            if (g.json_path) {
                json j = r.to_json();
                if (g.timestamps) j["generated_at"] = static_cast<long long>(std::time(nullptr));
                if (g.json_path->empty())
                    std::cout << j.dump(2) << "\n";
                else
                    write_json(*g.json_path, j);
            }
            if (!(g.json_path && g.json_path->empty()))
                std::cout << "selftest: " << (res.passed() ? "all criteria pass" : "FAILED") << "\n";
            return res.passed() ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "hypcy: " << e.what() << "\n\n" << app.help();
        return 2;
    }
    if (json_opt->count() > 0) g.json_path = json_arg;
    if (!action) {
        std::cerr << app.help();
        return 2;
    }
    try {
        return action();
    } catch (const std::exception& e) {
        std::cerr << "hypcy: " << e.what() << "\n";
        return 1;
    }
}
