#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "setavg/multivariate.hpp"
#include "setavg/operators.hpp"

namespace setavg {

enum class OperatorKind { Bernstein, DeCasteljau };
OperatorKind parse_operator_kind(std::string_view name);
std::string_view operator_name(OperatorKind kind);

struct ExperimentRow {
    std::string op;
    unsigned n = 0;
    Rational x;
    Rational error;   // d(F(x), O_n(F, x)), exact
    double bound = 0; // L (1/n)^nu + L (x(1-x)/n)^(nu/2)
    Rational measure; // mu(O_n(F, x))
};

double holder_rate_bound(const HolderClass& h, unsigned n, const Rational& x);

// k / (points - 1), k = 0..points-1.
std::vector<Rational> uniform_grid(unsigned points);

// One row per (n, x), sorted by n then x.
std::vector<ExperimentRow> run_convergence(const SampledSVF& f, OperatorKind op, std::span<const unsigned> degrees,
                                           std::span<const Rational> grid, const AverageConfig& cfg = {});

// CSV with header operator,n,x,error,bound,measure. Decimals carry 12
// significant digits; `exact` prints x, error and measure as p/q.
std::string convergence_csv(std::span<const ExperimentRow> rows, bool exact = false);

struct MonotoneReport {
    bool nondecreasing = true;  // direction of the samples
    bool chain_holds = true;
    // First grid pair (x_k, x_{k+1}) whose values are not nested.
    std::optional<std::pair<Rational, Rational>> violation;
    // Step sequence breaking containment for the weights at the violation.
    std::optional<std::vector<IntervalSet>> witness;
    std::vector<Rational> set_speeds;
    std::vector<Rational> measure_speeds;
    bool speed_identity = false;
};

// Throws std::invalid_argument when F is not nested at the scheme nodes.
MonotoneReport run_monotone_check(const SampledSVF& f, const WeightScheme& scheme, unsigned n,
                                  std::span<const Rational> grid, const AverageConfig& cfg = {});

struct MultivarRow {
    unsigned level = 0;
    Rational delta;
    Point2 query;
    Rational error;
    double bound = 0;  // 2 L Delta^nu
};

std::vector<MultivarRow> run_multivariate(const PlanarSVF& f, const Triangulation& base, unsigned levels,
                                          std::span<const Point2> queries, const AverageConfig& cfg = {});
std::string multivariate_csv(std::span<const MultivarRow> rows, bool exact = false);

}  // namespace setavg
