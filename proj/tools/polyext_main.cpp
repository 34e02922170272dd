// Command-line front end: bound tables, extremal constructions, theorem
// verification reports, optimizer runs, and SVG rendering.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyext/bounds.hpp"
#include "polyext/constructions.hpp"
#include "polyext/json_text.hpp"
#include "polyext/metrics.hpp"
#include "polyext/optimize.hpp"
#include "polyext/polygon_io.hpp"
#include "polyext/svg.hpp"
#include "polyext/verify.hpp"

namespace {

using namespace polyext;

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int run_bounds(const std::vector<int>& ns, const std::string& json_path, bool quiet) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    if (!quiet)
        std::printf("%5s %10s %10s %10s %8s %8s %10s %12s %12s %8s %10s\n", "n",
                    "s_lower", "s_upper", "S", "t_lo", "t_hi", "T", "F", "G", "s_c",
                    "t_c_upper");
    for (int n : ns) {
        const bounds::BoundSet b = bounds::bound_set(n);
        rows.push_back(bounds::to_json(b));
        if (!quiet)
            std::printf("%5d %10.6g %10.6g %10.6g %8.4g %8.4g %10.6g %12.8g%s %12.8g%s "
                        "%8.4g %10.6g\n",
                        b.n, b.s_lower, b.s_upper, b.S, b.t_lower, b.t_upper, b.T, b.F,
                        b.F_attained ? "" : "*", b.G, b.G_attained ? "" : "*", b.s_c,
                        b.t_c_upper);
    }
    if (!quiet)
        std::printf("(* = supremum for even n, approached but not attained)\n");
    if (!json_path.empty()) write_json_file(json_path, rows);
    return 0;
}

int run_construct(const construct::ConstructionSpec& spec, const std::string& out,
                  bool circle, bool quiet) {
    const Polygon p = construct::build(spec);
    if (ends_with(out, ".svg")) {
        SvgOptions options;
        options.draw_unit_circle =
            circle || spec.kind == construct::Kind::StarThrackle ||
            spec.kind == construct::Kind::SimpleExtremalF ||
            spec.kind == construct::Kind::NearDiameterZigzag;
        write_polygon_svg(out, p, options);
    } else {
        save_polygon(out, p);
    }
    if (!quiet) {
        const MetricSummary m = summarize(p);
        std::printf("%s n=%d -> %s\n", construct::kind_name(spec.kind).c_str(), spec.n,
                    out.c_str());
        std::printf("perimeter=%.17g sum|AiAj|=%.17g sum|AiAj|^2=%.17g\n", m.perimeter,
                    m.sum_distances, m.sum_squared_distances);
    }
    return 0;
}

int run_optimize(const opt::Objective& objective, const opt::ConstraintSet& constraints,
                 int n, uint64_t seed, int restarts, int max_iters,
                 const std::string& out, bool quiet) {
    const opt::OptimizationRun run =
        opt::optimize(objective, constraints, n, seed, restarts, max_iters);
    if (!quiet) std::printf("best_value = %.17g\n", run.best_value);
    if (!out.empty()) write_json_file(out, opt::to_json(run));
    return 0;
}

int run_render(const std::string& in, const std::string& out, bool circle,
               bool no_labels, bool quiet) {
    const Polygon p = load_polygon(in);
    SvgOptions options;
    options.draw_unit_circle = circle;
    options.labels = !no_labels;
    write_polygon_svg(out, p, options);
    if (!quiet) std::printf("%s -> %s\n", in.c_str(), out.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Extremal polygon metrics: bounds, constructions, certification"};
    app.require_subcommand(1);
    bool quiet = false;
    app.add_flag("--quiet", quiet, "suppress table/progress output");

    // bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "closed-form bound table");
    std::vector<int> ns;
    std::string bounds_json;
    cmd_bounds->add_option("--n", ns, "polygon sizes (repeatable)")->required();
    cmd_bounds->add_option("--json", bounds_json, "write the table as JSON");

    // construct
    auto* cmd_construct = app.add_subcommand("construct", "build an extremal polygon");
    std::string kind_name;
    construct::ConstructionSpec spec;
    std::string construct_out;
    int split = -1;
    bool circle = false;
    cmd_construct
        ->add_option("--kind", kind_name,
                     "two_cluster | alternating_collinear | star_thrackle | "
                     "simple_extremal_f | near_diameter_zigzag")
        ->required();
    cmd_construct->add_option("--n", spec.n, "vertex count")->required();
    cmd_construct->add_option("--epsilon", spec.epsilon, "separation scale");
    cmd_construct->add_option("--k", split, "two_cluster split");
    cmd_construct->add_option("--radius", spec.radius, "star_thrackle radius");
    cmd_construct->add_option("--out", construct_out, "output .json or .svg path")
        ->required();
    cmd_construct->add_flag("--circle", circle, "draw the unit circle in SVG output");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run one theorem's check suite");
    std::string theorem;
    int n_from = 3, n_to = 19;
    uint64_t verify_seed = 0;
    std::string verify_json;
    cmd_verify
        ->add_option("--theorem", theorem, "T1 T2 T3 T4 T5 T6 L1 L3 L4")
        ->required();
    cmd_verify->add_option("--n-from", n_from, "range start (default 3)");
    cmd_verify->add_option("--n-to", n_to, "range end (default 19)");
    cmd_verify->add_option("--seed", verify_seed, "sampling seed");
    cmd_verify->add_option("--json", verify_json, "write the report as JSON");

    // optimize
    auto* cmd_opt = app.add_subcommand("optimize", "derivative-free certification run");
    std::string obj_name = "sumdist", dir_name = "max", opt_out;
    int opt_n = 4;
    uint64_t opt_seed = 0;
    int restarts = 200, max_iters = 2000;
    opt::ConstraintSet constraints;
    cmd_opt->add_option("--objective", obj_name, "sumdist | sumsq | perimeter");
    cmd_opt->add_option("--direction", dir_name, "max | min");
    cmd_opt->add_option("--n", opt_n, "vertex count")->required();
    cmd_opt->add_flag("--unit-perimeter", constraints.unit_perimeter,
                      "constrain the perimeter to 1");
    cmd_opt->add_flag("--disk", constraints.inside_unit_disk,
                      "constrain vertices to the unit disk");
    cmd_opt->add_flag("--simple", constraints.require_simple,
                      "restrict the search to simple polygons");
    cmd_opt->add_option("--seed", opt_seed, "restart stream seed");
    cmd_opt->add_option("--restarts", restarts, "independent restarts");
    cmd_opt->add_option("--max-iters", max_iters, "iterations per restart");
    cmd_opt->add_option("--out", opt_out, "write the run as JSON");

    // render
    auto* cmd_render = app.add_subcommand("render", "polygon JSON -> SVG figure");
    std::string render_in, render_out;
    bool render_circle = false, no_labels = false;
    cmd_render->add_option("--in", render_in, "polygon JSON path")->required();
    cmd_render->add_option("--out", render_out, "SVG output path")->required();
    cmd_render->add_flag("--circle", render_circle, "draw the unit circle");
    cmd_render->add_flag("--no-labels", no_labels, "omit vertex labels");

    // Global flags (--quiet) may appear after the subcommand.
    for (CLI::App* sub : {cmd_bounds, cmd_construct, cmd_verify, cmd_opt, cmd_render})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_bounds)) return run_bounds(ns, bounds_json, quiet);
        if (app.got_subcommand(cmd_construct)) {
            const auto kind = construct::kind_from_name(kind_name);
            if (!kind) {
                std::fprintf(stderr, "unknown construction kind: %s\n",
                             kind_name.c_str());
                return 2;
            }
            spec.kind = *kind;
            if (split >= 0) spec.cluster_split = split;
            return run_construct(spec, construct_out, circle, quiet);
        }
        if (app.got_subcommand(cmd_verify)) {
            const auto tag = cli::tag_from_name(theorem);
            if (!tag) {
                std::fprintf(stderr, "unknown theorem tag: %s\n", theorem.c_str());
                return 2;
            }
            const cli::VerificationReport report =
                cli::run_verify(*tag, n_from, n_to, verify_seed);
            if (!quiet) std::fputs(cli::format_report(report).c_str(), stdout);
            if (!verify_json.empty()) write_json_file(verify_json, cli::to_json(report));
            return report.overall_pass ? 0 : 1;
        }
        if (app.got_subcommand(cmd_opt)) {
            opt::Objective objective;
            if (obj_name == "sumdist")
                objective.kind = opt::ObjectiveKind::SumDistances;
            else if (obj_name == "sumsq")
                objective.kind = opt::ObjectiveKind::SumSquaredDistances;
            else if (obj_name == "perimeter")
                objective.kind = opt::ObjectiveKind::Perimeter;
            else {
                std::fprintf(stderr, "unknown objective: %s\n", obj_name.c_str());
                return 2;
            }
            if (dir_name == "max")
                objective.direction = opt::Direction::Maximize;
            else if (dir_name == "min")
                objective.direction = opt::Direction::Minimize;
            else {
                std::fprintf(stderr, "unknown direction: %s\n", dir_name.c_str());
                return 2;
            }
            if (!constraints.unit_perimeter && !constraints.inside_unit_disk) {
                std::fprintf(stderr,
                             "error: pass --unit-perimeter and/or --disk\n");
                return 2;
            }
            return run_optimize(objective, constraints, opt_n, opt_seed, restarts,
                                max_iters, opt_out, quiet);
        }
        if (app.got_subcommand(cmd_render))
            return run_render(render_in, render_out, render_circle, no_labels, quiet);
    } catch (const BadN& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const BadRange& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const BadSplit& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const BadEpsilon& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const BadRadius& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
