#include "setavg/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace setavg {

OperatorKind parse_operator_kind(std::string_view name) {
    if (name == "bernstein") return OperatorKind::Bernstein;
    if (name == "decasteljau") return OperatorKind::DeCasteljau;
    throw std::invalid_argument("unknown operator: " + std::string(name));
}

std::string_view operator_name(OperatorKind kind) {
    return kind == OperatorKind::Bernstein ? "bernstein" : "decasteljau";
}

double holder_rate_bound(const HolderClass& h, unsigned n, const Rational& x) {
    const double L = h.constant.to_double();
    const double nu = h.exponent.to_double();
    const double xd = x.to_double();
    return L * std::pow(1.0 / n, nu) + L * std::pow(xd * (1.0 - xd) / n, nu / 2.0);
}

std::vector<Rational> uniform_grid(unsigned points) {
    if (points < 2) throw std::invalid_argument("grid needs at least two points");
    std::vector<Rational> grid;
    for (unsigned k = 0; k < points; ++k) grid.emplace_back(static_cast<long>(k), static_cast<long>(points - 1));
    return grid;
}

std::vector<ExperimentRow> run_convergence(const SampledSVF& f, OperatorKind op, std::span<const unsigned> degrees,
                                           std::span<const Rational> grid, const AverageConfig& cfg) {
    if (!f.holder) throw std::invalid_argument("convergence run needs a declared Hoelder class");
    std::vector<unsigned> ns(degrees.begin(), degrees.end());
    std::vector<Rational> xs(grid.begin(), grid.end());
    std::sort(ns.begin(), ns.end());
    std::sort(xs.begin(), xs.end());

    std::vector<ExperimentRow> rows;
    rows.reserve(ns.size() * xs.size());
    for (unsigned n : ns)
        for (const auto& x : xs) {
            const IntervalSet approx =
                op == OperatorKind::Bernstein ? bernstein_svf(f, n, x, cfg) : decasteljau_svf(f, n, x, cfg);
            rows.push_back({std::string(operator_name(op)), n, x, sym_diff_distance(f(x), approx),
                            holder_rate_bound(*f.holder, n, x), measure(approx)});
        }
    return rows;
}

std::string convergence_csv(std::span<const ExperimentRow> rows, bool exact) {
    std::ostringstream os;
    os << "operator,n,x,error,bound,measure\n";
    char bound[64];
    for (const auto& r : rows) {
        std::snprintf(bound, sizeof bound, "%.12g", r.bound);
        os << r.op << ',' << r.n << ',' << (exact ? r.x.to_string() : r.x.to_decimal()) << ','
           << (exact ? r.error.to_string() : r.error.to_decimal()) << ',' << bound << ','
           << (exact ? r.measure.to_string() : r.measure.to_decimal()) << '\n';
    }
    return os.str();
}

MonotoneReport run_monotone_check(const SampledSVF& f, const WeightScheme& scheme, unsigned n,
                                  std::span<const Rational> grid, const AverageConfig& cfg) {
    std::vector<IntervalSet> samples;
    for (const auto& node : scheme.nodes(n)) samples.push_back(f(node));
    bool up = true, down = true;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        up = up && contains_ae(samples[i + 1], samples[i]);
        down = down && contains_ae(samples[i], samples[i + 1]);
    }
    if (!up && !down) throw std::invalid_argument("monotone check on a non-monotone set-valued function");

    MonotoneReport report;
    report.nondecreasing = up;
    const IntervalSetSpace space{cfg};
    std::vector<IntervalSet> values;
    for (const auto& x : grid) values.push_back(positive_operator(f, scheme, n, x, space));

    for (std::size_t k = 0; k + 1 < values.size(); ++k) {
        const bool nested = up ? contains_ae(values[k + 1], values[k]) : contains_ae(values[k], values[k + 1]);
        if (nested) continue;
        report.chain_holds = false;
        report.violation = std::make_pair(grid[k], grid[k + 1]);
        const WeightVector wx = scheme.weights(n, grid[k]);
        const WeightVector wy = scheme.weights(n, grid[k + 1]);
        report.witness = up ? monotonicity_witness(wx, wy) : monotonicity_witness(wy, wx);
        break;
    }

    if (report.chain_holds) {
        report.set_speeds = speed_profile(f, scheme, n, grid, cfg);
        report.measure_speeds = measure_speed_profile(f, scheme, n, grid);
        report.speed_identity = report.set_speeds == report.measure_speeds;
    }
    return report;
}

std::vector<MultivarRow> run_multivariate(const PlanarSVF& f, const Triangulation& base, unsigned levels,
                                          std::span<const Point2> queries, const AverageConfig& cfg) {
    const auto seq = RefinementSequence::build(base, levels);
    const double L = f.holder_constant.to_double();
    const double nu = f.holder_exponent.to_double();
    std::vector<MultivarRow> rows;
    for (unsigned level = 0; level < seq.levels.size(); ++level) {
        const auto& t = seq.levels[level];
        const double bound = 2.0 * L * std::pow(t.mesh_diameter.to_double(), nu);
        for (const auto& q : queries)
            rows.push_back({level, t.mesh_diameter, q, sym_diff_distance(f(q), pl_interpolant_svf(f, t, q, cfg)), bound});
    }
    return rows;
}

std::string multivariate_csv(std::span<const MultivarRow> rows, bool exact) {
    std::ostringstream os;
    os << "level,Delta,query_x,query_y,error,bound\n";
    char bound[64];
    auto fmt = [exact](const Rational& r) { return exact ? r.to_string() : r.to_decimal(); };
    for (const auto& r : rows) {
        std::snprintf(bound, sizeof bound, "%.12g", r.bound);
        os << r.level << ',' << fmt(r.delta) << ',' << fmt(r.query.x) << ',' << fmt(r.query.y) << ','
           << fmt(r.error) << ',' << bound << '\n';
    }
    return os.str();
}

}  // namespace setavg
