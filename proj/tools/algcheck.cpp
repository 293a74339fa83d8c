// algcheck: exhaustive and seeded checks of Boolean calculi, braid maps,
// a 2x2 matrix power-sum identity, Jordan curve metrics and an incidence
// closure theorem.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "algcheck/suites.hpp"

namespace {

enum Exit { ok = 0, check_failed = 1, usage = 2 };

struct Output {
    bool json = false;
    bool timings = false;
};

int emit(const std::vector<algcheck::SuiteReport>& suites, const Output& out) {
    if (out.json) {
        std::cout << algcheck::to_json(suites, out.timings).dump(2) << '\n';
    } else {
        algcheck::write_text(std::cout, suites);
    }
    return algcheck::all_ok(suites) ? ok : check_failed;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in{path};
    if (!in) throw algcheck::ValidationError("cannot open '" + path + "'");
    return in;
}

} // namespace

int main(int argc, char** argv) {
    using namespace algcheck;
    CLI::App app{"Exhaustive and seeded checks for Boolean calculi, braid maps, matrix series, curves and incidence"};
    app.set_version_flag("--version", std::string(tool_version));
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    app.add_flag("--json", out.json, "Emit the canonical JSON report");
    app.add_flag("--timings", out.timings, "Include per-check durations in JSON output");

    BooleanOptions bopt;
    std::optional<std::uint32_t> base_e;
    auto* boolean = app.add_subcommand("boolean", "Triple trigonometry, weak B-ring axioms, pair exponential");
    boolean->add_option("--atoms", bopt.atoms, "Atom counts to check (1..4)")->check(CLI::Range(1u, 4u))->expected(1, -1);
    boolean->add_option("--base-e", base_e, "Fix the exponential base to this bitmask");

    BraidOptions bropt;
    bool no_enumerate = false;
    std::string map_file;
    auto* braid = app.add_subcommand("braid", "Braid condition for parametrised maps and small carriers");
    braid->add_option("--atoms", bropt.atoms, "Atom counts to check (1..3)")->check(CLI::Range(1u, 3u))->expected(1, -1);
    bool enumerate_flag = false;
    braid->add_flag("--enumerate", enumerate_flag, "Run the exhaustive m=2 enumeration (default)");
    braid->add_flag("--no-enumerate", no_enumerate, "Skip the exhaustive m=2 enumeration");
    braid->add_option("--map", map_file, "Check a square map given as a table file")->check(CLI::ExistingFile);

    MatrixOptions mopt;
    std::string matrix_file;
    bool no_examples = false;
    auto* matrix = app.add_subcommand("matrix", "Power-sum identity for 2x2 matrices of determinant 1");
    matrix->add_option("--random", mopt.random_count, "Number of seeded random samples");
    matrix->add_option("--seed", mopt.seed, "Seed for random samples");
    matrix->add_option("--input", matrix_file, "File with one matrix per line (a b c d)")->check(CLI::ExistingFile);
    matrix->add_flag("--no-examples", no_examples, "Skip the built-in worked examples");

    std::string shape = "defaults";
    double radius = 1, semi_a = 2, semi_b = 1, width = 1;
    int samples = 0;
    std::string polyline_file, plot_prefix;
    auto* curve = app.add_subcommand("curve", "Length, diameter and chord inequalities for Jordan curves");
    curve->add_option("--shape", shape, "circle, ellipse, reuleaux, square, polyline or defaults")
        ->check(CLI::IsMember({"defaults", "circle", "ellipse", "reuleaux", "square", "polyline"}));
    curve->add_option("--radius", radius, "Circle radius");
    curve->add_option("-a", semi_a, "Ellipse semi-axis along x");
    curve->add_option("-b", semi_b, "Ellipse semi-axis along y");
    curve->add_option("--width", width, "Reuleaux triangle width");
    curve->add_option("--samples", samples, "Sample count for parametric shapes");
    curve->add_option("--polyline", polyline_file, "Closed polyline, one 'x y' vertex per line")->check(CLI::ExistingFile);
    curve->add_option("--plot-data,--emit-plot-data", plot_prefix, "Write <prefix>.chords.csv and <prefix>.points.csv");

    IncidenceOptions iopt;
    auto* incid = app.add_subcommand("incidence", "Seeded exact checks of the triangle incidence closure");
    incid->add_option("--trials", iopt.trials, "Number of seeded configurations")->check(CLI::PositiveNumber);
    incid->add_option("--seed", iopt.seed, "First seed; trial i uses seed + i");
    incid->add_option("--certificate-dir", iopt.certificate_dir, "Write counterexample certificates here")
        ->check(CLI::ExistingDirectory);

    auto* all = app.add_subcommand("all", "Run every suite at default scale");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*boolean) {
            bopt.base_e = base_e;
            return emit({run_boolean_suite(bopt)}, out);
        }
        if (*braid) {
            bropt.enumerate = enumerate_flag || !no_enumerate;
            auto report = run_braid_suite(bropt);
            if (!map_file.empty()) {
                auto in = open_input(map_file);
                const auto phi = read_square_map(in);
                const auto v = braid_check(phi);
                report.add("input/" + map_file, "phi12 phi23 phi12 = phi23 phi12 phi23", v.holds,
                           v.witness ? std::optional{v.witness->to_string()} : std::nullopt);
            }
            return emit({report}, out);
        }
        if (*matrix) {
            mopt.examples = !no_examples;
            mopt.per_matrix = true;
            if (!matrix_file.empty()) {
                auto in = open_input(matrix_file);
                mopt.inputs = read_matrix_file(in);
            }
            return emit({run_matrix_suite(mopt)}, out);
        }
        if (*curve) {
            CurveOptions copt;
            const auto with_samples = [&](jordan::CurveSpec spec) {
                if (samples > 0) spec.sample_count = samples;
                return spec;
            };
            if (!polyline_file.empty() && shape != "polyline") shape = "polyline";
            if (shape == "defaults") {
                copt.jobs = default_curve_jobs();
            } else if (shape == "circle") {
                copt.jobs.push_back({"circle", with_samples({jordan::Circle{radius}, 4096}), radius == 1 && samples == 0});
            } else if (shape == "ellipse") {
                copt.jobs.push_back({"ellipse", with_samples({jordan::Ellipse{semi_a, semi_b}, 8192}),
                                     semi_a == 2 && semi_b == 1 && samples == 0});
            } else if (shape == "reuleaux") {
                copt.jobs.push_back({"reuleaux", with_samples({jordan::Reuleaux{width}, 4096}), width == 1 && samples == 0});
            } else if (shape == "square") {
                copt.jobs.push_back({"square", {jordan::PolylineShape{square_polyline(2)}, 4}, true});
            } else {
                if (polyline_file.empty()) throw ValidationError("--shape polyline needs --polyline FILE");
                auto in = open_input(polyline_file);
                jordan::CurveSpec spec{jordan::PolylineShape{jordan::read_polyline(in)}, 0};
                copt.jobs.push_back({"polyline", spec, false, false});
            }
            if (!plot_prefix.empty()) copt.plot_prefix = plot_prefix;
            return emit({run_curve_suite(copt)}, out);
        }
        if (*incid) {
            return emit({run_incidence_suite(iopt)}, out);
        }
        if (*all) {
            return emit(run_all(), out);
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}
