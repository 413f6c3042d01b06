// Command-line front end: partition averages, set-valued operators,
// convergence experiments, multivariate interpolation and raster figures.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "setavg/catalog.hpp"
#include "setavg/experiments.hpp"
#include "setavg/interval_set.hpp"
#include "setavg/multivariate.hpp"
#include "setavg/operators.hpp"
#include "setavg/partition.hpp"
#include "setavg/raster.hpp"
#include "setavg/set_literal.hpp"

using namespace setavg;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

AverageConfig parse_ref_point(const std::string& text) {
    if (text == "centroid") return AverageConfig::centroid_of_union();
    if (text == "per-element") return AverageConfig::per_element();
    return AverageConfig::fixed(Rational::parse(text));
}

std::string show(const Rational& r, bool exact) { return exact ? r.to_string() : r.to_decimal(); }

Point2 point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("point must be a two-element array");
    return {rational_from_json(j[0]), rational_from_json(j[1])};
}

Point2 parse_point(const std::string& text) {
    const auto coords = parse_rational_list(text);
    if (coords.size() != 2) throw std::invalid_argument("query must be 'x,y'");
    return {coords[0], coords[1]};
}

ShapeSpec shape_from_json(const json& j) {
    if (j.contains("triangle")) {
        const auto& v = j.at("triangle");
        return TriangleShape{point_from_json(v.at(0)), point_from_json(v.at(1)), point_from_json(v.at(2))};
    }
    if (j.contains("rectangle")) {
        const auto& v = j.at("rectangle");
        return RectangleShape{point_from_json(v.at(0)), point_from_json(v.at(1))};
    }
    if (j.contains("ellipse")) {
        const auto& v = j.at("ellipse");
        const auto axes = v.at("semi_axes");
        return EllipseShape{point_from_json(v.at("center")), rational_from_json(axes.at(0)),
                            rational_from_json(axes.at(1))};
    }
    throw std::invalid_argument("shape must be a triangle, rectangle or ellipse");
}

void print_result(const IntervalSet& result, const std::vector<IntervalSet>& samples, bool exact) {
    std::cout << "set: " << format_set_literal(result) << '\n';
    std::cout << "measure: " << show(measure(result), exact) << '\n';
    for (std::size_t i = 0; i < samples.size(); ++i)
        std::cout << "distance[" << i << "]: " << show(sym_diff_distance(samples[i], result), exact) << '\n';
}

void warn_holder(const SampledSVF& f, std::uint64_t seed) {
    if (!holder_spot_check(f, seed)) std::cerr << "warning: " << f.name << " violates its declared Hoelder class\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Partition averages of sets and set-valued approximation operators"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_flag("--help", "Print this help message and exit");

    std::string ref_point = "centroid";
    std::uint64_t seed = 0;
    bool exact = false;
    app.add_option("--ref-point", ref_point, "Ball center: centroid, per-element, or a rational")
        ->capture_default_str();
    app.add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();
    app.add_flag("--exact", exact, "Print exact rationals p/q");

    // average
    auto* average = app.add_subcommand("average", "Partition average of interval sets");
    std::string sets_path, weights_text;
    average->add_option("--sets", sets_path, "JSON file with a list of set literals")->required();
    average->add_option("--weights", weights_text, "Comma-separated rational weights")->required();

    // bernstein / decasteljau / operator
    std::string svf_name = "grow", x_text = "1/2", scheme_name = "bernstein";
    unsigned n = 4;
    auto add_operator_options = [&](CLI::App* sub) {
        sub->add_option("--svf", svf_name, "Built-in set-valued function")->capture_default_str();
        sub->add_option("--n", n, "Operator degree")->capture_default_str();
        sub->add_option("--x", x_text, "Evaluation point in [0,1]")->capture_default_str();
    };
    auto* bernstein = app.add_subcommand("bernstein", "Set-valued Bernstein operator");
    add_operator_options(bernstein);
    auto* decasteljau = app.add_subcommand("decasteljau", "de Casteljau variant of the set-valued Bernstein operator");
    add_operator_options(decasteljau);
    auto* op = app.add_subcommand("operator", "Positive sample-based operator");
    add_operator_options(op);
    op->add_option("--scheme", scheme_name, "Weight scheme: bernstein or pl")->capture_default_str();

    // multivar
    auto* multivar = app.add_subcommand("multivar", "Piecewise-linear interpolation over refined triangulations");
    std::string points_path, planar_name = "plane";
    std::vector<std::string> query_texts;
    unsigned levels = 4;
    multivar->add_option("--points", points_path, "JSON list of rational pairs (default: unit square)");
    multivar->add_option("--levels", levels, "Number of refinements")->capture_default_str();
    multivar->add_option("--svf", planar_name, "Built-in planar set-valued function")->capture_default_str();
    multivar->add_option("--query", query_texts, "Query point 'x,y' (repeatable; default 5x5 grid)");

    // raster
    auto* raster = app.add_subcommand("raster", "Occupancy-grid partition and average of planar shapes");
    raster->set_help_flag("--help", "Print this help message and exit");
    std::string shapes_path, raster_weights = "1/3,1/3,1/3", h_text = "13/200";
    std::vector<std::string> outputs;
    raster->add_option("--shapes", shapes_path, "JSON list of shapes (default: figure fixture)");
    raster->add_option("--weights", raster_weights, "Comma-separated rational weights")->capture_default_str();
    raster->add_option("--h", h_text, "Cell size")->capture_default_str();
    raster->add_option("--out", outputs, "PGM output; a file named partition*.pgm receives the labeled partition");

    // converge
    auto* converge = app.add_subcommand("converge", "Approximation error table");
    std::string operator_text = "bernstein";
    std::vector<unsigned> degrees{1, 2, 4, 8, 16, 32, 64, 128};
    unsigned grid_points = 33;
    converge->add_option("--svf", svf_name, "Built-in set-valued function")->capture_default_str();
    converge->add_option("--operator", operator_text, "bernstein or decasteljau")->capture_default_str();
    converge->add_option("--n", degrees, "Degrees")->delimiter(',');
    converge->add_option("--grid", grid_points, "Number of uniform grid points")->capture_default_str();

    // monotone
    auto* monotone = app.add_subcommand("monotone", "Monotonicity preservation and speed identity");
    monotone->add_option("--svf", svf_name, "Built-in set-valued function")->capture_default_str();
    monotone->add_option("--scheme", scheme_name, "bernstein, pl or reversed-bernstein")->capture_default_str();
    monotone->add_option("--n", n, "Operator degree")->capture_default_str();
    monotone->add_option("--grid", grid_points, "Number of uniform grid points")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    auto scheme_by_name = [](const std::string& name) {
        if (name == "bernstein") return WeightScheme::bernstein();
        if (name == "pl") return WeightScheme::piecewise_linear();
        if (name == "reversed-bernstein") return WeightScheme::reversed_bernstein();
        throw std::invalid_argument("unknown scheme: " + name);
    };

    try {
        const AverageConfig cfg = parse_ref_point(ref_point);

        if (*average) {
            const auto sets = parse_set_list(read_file(sets_path));
            const WeightVector w(parse_rational_list(weights_text));
            print_result(partition_average(sets, w, cfg), sets, exact);
        } else if (*bernstein || *decasteljau || *op) {
            const SampledSVF f = builtin_svf(svf_name);
            warn_holder(f, seed);
            const Rational x = Rational::parse(x_text);
            const WeightScheme scheme = *op ? scheme_by_name(scheme_name) : WeightScheme::bernstein();
            std::vector<IntervalSet> samples;
            for (const auto& node : scheme.nodes(n)) samples.push_back(f(node));
            IntervalSet result;
            if (*bernstein) result = bernstein_svf(f, n, x, cfg);
            else if (*decasteljau) result = decasteljau_svf(f, n, x, cfg);
            else result = positive_operator(f, scheme, n, x, IntervalSetSpace{cfg});
            print_result(result, samples, exact);
        } else if (*multivar) {
            std::vector<Point2> points;
            if (points_path.empty()) {
                points = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
            } else {
                for (const auto& p : json::parse(read_file(points_path))) points.push_back(point_from_json(p));
            }
            std::vector<Point2> queries;
            for (const auto& q : query_texts) queries.push_back(parse_point(q));
            if (queries.empty())
                for (long i = 0; i < 5; ++i)
                    for (long j = 0; j < 5; ++j) queries.push_back({Rational(2 * i + 1, 10), Rational(2 * j + 1, 10)});
            const auto rows = run_multivariate(builtin_planar_svf(planar_name), triangulate(points), levels, queries, cfg);
            std::cout << multivariate_csv(rows, exact);
        } else if (*raster) {
            std::vector<ShapeSpec> shapes;
            if (shapes_path.empty()) {
                shapes = figure_shapes();
            } else {
                for (const auto& s : json::parse(read_file(shapes_path))) shapes.push_back(shape_from_json(s));
            }
            const Rational h = Rational::parse(h_text);
            const GridSpec grid = shapes_path.empty()
                                      ? figure_grid(static_cast<std::size_t>(ceil(Rational(13) / h).get_si()))
                                      : grid_covering(shapes, h);
            std::vector<RasterSet> rasters;
            for (const auto& s : shapes) rasters.push_back(rasterize(s, grid));
            const WeightVector w(parse_rational_list(raster_weights));
            const RasterSet avg = raster_partition_average(rasters, w, raster_centroid(raster_union(rasters)));
            double target = 0;
            for (std::size_t i = 0; i < shapes.size(); ++i) target += w[i].to_double() * shape_area(shapes[i]);
            std::cout << "average_measure: " << show(avg.measure(), exact) << '\n';
            std::cout << "target_measure: " << target << '\n';
            for (const auto& path : outputs) {
                if (std::filesystem::path(path).filename().string().rfind("partition", 0) == 0)
                    write_pgm(raster_partition(rasters), path);
                else
                    write_pgm(avg, path);
            }
        } else if (*converge) {
            const SampledSVF f = builtin_svf(svf_name);
            warn_holder(f, seed);
            const auto rows = run_convergence(f, parse_operator_kind(operator_text), degrees, uniform_grid(grid_points), cfg);
            std::cout << convergence_csv(rows, exact);
        } else if (*monotone) {
            const SampledSVF f = builtin_svf(svf_name);
            const auto report = run_monotone_check(f, scheme_by_name(scheme_name), n, uniform_grid(grid_points), cfg);
            std::cout << "direction: " << (report.nondecreasing ? "non-decreasing" : "non-increasing") << '\n';
            std::cout << "chain_holds: " << (report.chain_holds ? "true" : "false") << '\n';
            if (report.violation) {
                std::cout << "violation: " << show(report.violation->first, exact) << ','
                          << show(report.violation->second, exact) << '\n';
                if (report.witness) {
                    std::cout << "witness:";
                    for (const auto& s : *report.witness) std::cout << ' ' << format_set_literal(s);
                    std::cout << '\n';
                }
                return 1;
            }
            std::cout << "speed_identity: " << (report.speed_identity ? "true" : "false") << '\n';
            for (std::size_t k = 0; k < report.set_speeds.size(); ++k)
                std::cout << "speed[" << k << "]: " << show(report.set_speeds[k], exact) << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
