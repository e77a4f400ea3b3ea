// solitonkit command-line tool.
//
// Exit codes: 0 every check meets its expectation, 1 some check does not,
// 2 the input could not be loaded (bad flags, parse error, unknown name).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "solitonkit/suites.hpp"
#include "solitonkit/zoo.hpp"

namespace {

using namespace solitonkit;

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Common {
    std::string spec_path;
    std::string zoo;
    std::string format;
    std::string output;
    double tol = 1e-9;
    std::uint64_t seed = 42;
    int samples = -1;
    std::string grid;
    bool seed_given = false;
};

void add_source(CLI::App* cmd, Common& c) {
    cmd->add_option("spec", c.spec_path, "manifold spec file (JSON)");
    cmd->add_option("--zoo", c.zoo, "built-in manifold name (see list-zoo)");
}

void add_run_flags(CLI::App* cmd, Common& c, const std::string& default_format) {
    c.format = default_format;
    cmd->add_option("--tol", c.tol, "tolerance: a point passes when residual <= tol * (1 + scale)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", c.seed, "seed for random sample points")->capture_default_str();
    cmd->add_option("--samples", c.samples, "number of random sample points (default: the manifold's plan)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--grid", c.grid, "grid override, e.g. x=-1:1:5,z=1.1:2:5");
    cmd->add_option("--format", c.format, "json, csv or table")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "csv", "table"}));
    cmd->add_option("-o,--output", c.output, "write the report here instead of stdout");
}

Manifold load_manifold(const Common& c) {
    if (!c.spec_path.empty() && !c.zoo.empty()) throw Error("give either a spec file or --zoo, not both");
    if (!c.zoo.empty()) return *zoo_entry(c.zoo).manifold;
    if (c.spec_path.empty()) throw Error("a spec file or --zoo <name> is required");
    return Manifold(load_spec(c.spec_path));
}

RunOptions run_options(const Common& c, CLI::App* cmd) {
    RunOptions o;
    o.tol = c.tol;
    if (cmd->count("--seed")) o.seed = c.seed;
    if (c.samples >= 0) o.samples = c.samples;
    o.grid = c.grid;
    return o;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

int finish(const ReportDocument& d, const Common& c) {
    emit(render(d, c.format), c.output);
    return d.passed() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Curvature and soliton checks for almost contact metric manifolds"};
    app.set_version_flag("--version", std::string(SOLITONKIT_VERSION));
    app.require_subcommand(1);

    Common validate, curvature, soliton, verify, exporter;
    bool frame = false, solve_lambda = false, all = false;
    std::vector<std::string> candidates;

    auto* v = app.add_subcommand("validate", "structure axioms and the (alpha, beta) fit");
    add_source(v, validate);
    add_run_flags(v, validate, "json");

    auto* cu = app.add_subcommand("curvature", "curvature identities and frame tables");
    add_source(cu, curvature);
    add_run_flags(cu, curvature, "json");
    cu->add_flag("--frame", frame, "project tables onto the orthonormal frame");

    auto* cs = app.add_subcommand("check-soliton", "soliton equations and their consequences");
    add_source(cs, soliton);
    add_run_flags(cs, soliton, "json");
    auto* cand_opt = cs->add_option("--candidate", candidates, "candidate name (repeatable)");
    auto* all_opt = cs->add_flag("--all", all, "check every candidate (the default)");
    cand_opt->excludes(all_opt);
    cs->add_flag("--solve-lambda", solve_lambda, "also fit the best lambda pointwise and report what is left");

    auto* vp = app.add_subcommand("verify-paper", "every check against the built-in Kenmotsu example");
    add_run_flags(vp, verify, "table");

    auto* ex = app.add_subcommand("export", "write a manifold as a spec file");
    add_source(ex, exporter);
    ex->add_option("-o,--output", exporter.output, "output path (default stdout)");

    auto* lz = app.add_subcommand("list-zoo", "list built-in manifolds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (v->parsed()) return finish(cmd_validate(load_manifold(validate), run_options(validate, v)), validate);
        if (cu->parsed()) {
            RunOptions o = run_options(curvature, cu);
            o.frame = frame;
            return finish(cmd_curvature(load_manifold(curvature), o), curvature);
        }
        if (cs->parsed()) {
            RunOptions o = run_options(soliton, cs);
            o.candidates = candidates;
            o.solve_lambda = solve_lambda;
            return finish(cmd_check_soliton(load_manifold(soliton), o), soliton);
        }
        if (vp->parsed()) {
            const ZooEntry e = paper_kenmotsu();
            return finish(cmd_verify(*e.manifold, run_options(verify, vp)), verify);
        }
        if (ex->parsed()) {
            emit(dump_spec(load_manifold(exporter).spec()), exporter.output);
            return 0;
        }
        if (lz->parsed()) {
            for (const auto& n : zoo_names()) {
                const ZooEntry e = zoo_entry(n);
                std::cout << n << "  (" << e.profile.classification << ", dim " << e.manifold->dim() << ")  "
                          << e.spec().description << "\n";
            }
            std::cout << "also: flat-cosymplectic-<odd m>, alpha-kenmotsu-<alpha>[-m<odd m>]\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
