#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <span>
#include <string>
#include <vector>

#include "setavg/interval_set.hpp"
#include "setavg/partition.hpp"
#include "setavg/rational.hpp"

namespace setavg {

// d(F(x), F(y)) <= L |x - y|^nu
struct HolderClass {
    Rational constant;
    Rational exponent;
};

// A set-valued function on [0, 1]. evaluate must be reentrant.
struct SampledSVF {
    std::string name;
    std::function<IntervalSet(const Rational&)> evaluate;
    std::optional<HolderClass> holder;

    IntervalSet operator()(const Rational& x) const { return evaluate(x); }
};

// Checks the declared Hoelder class on `pairs` seeded random pairs of [0,1]
// in floating point with tolerance 1e-9. True when no class is declared.
bool holder_spot_check(const SampledSVF& f, std::uint64_t seed, int pairs = 200);

// A family of positive sample-based operators: nodes 0 = x_0 < ... < x_l = 1
// and convex weights c_i(x) at every x in [0, 1].
struct WeightScheme {
    std::string name;
    std::function<std::vector<Rational>(unsigned n)> nodes;
    std::function<WeightVector(unsigned n, const Rational& x)> weights;

    static WeightScheme bernstein();
    // Hat functions on the uniform grid i/n.
    static WeightScheme piecewise_linear();
    // Bernstein weights at 1 - x: positive but order-reversing, so it fails
    // the dominance condition for every x < y.
    static WeightScheme reversed_bernstein();
};

// b(n, x; i) = C(n, i) x^i (1 - x)^(n - i), i = 0..n.
WeightVector bernstein_weights(unsigned n, const Rational& x);
// Hat-function weights on the nodes i/n.
WeightVector piecewise_linear_weights(unsigned n, const Rational& x);

// Real Bernstein polynomial sum_i b(n, x; i) f(i/n).
Rational bernstein_real(const std::function<Rational(const Rational&)>& f, unsigned n, const Rational& x);

// A metric space with a weighted average of finitely many points.
template <class S>
concept AverageableSpace = requires(const S& space, const typename S::Point& a,
                                    std::span<const typename S::Point> points, const WeightVector& w) {
    { space.distance(a, a) } -> std::convertible_to<Rational>;
    { space.weighted_average(points, w) } -> std::convertible_to<typename S::Point>;
};

// Regular compact interval sets with the symmetric-difference metric and the
// partition average. Zero-weighted points stay in the partition.
struct IntervalSetSpace {
    using Point = IntervalSet;
    AverageConfig config;

    Rational distance(const IntervalSet& a, const IntervalSet& b) const { return sym_diff_distance(a, b); }
    IntervalSet weighted_average(std::span<const IntervalSet> points, const WeightVector& w) const {
        return partition_average(points, w, config);
    }
};

// Rationals with |a - b| and the arithmetic mean.
struct RealSpace {
    using Point = Rational;

    Rational distance(const Rational& a, const Rational& b) const { return abs(a - b); }
    Rational weighted_average(std::span<const Rational> points, const WeightVector& w) const;
};

static_assert(AverageableSpace<IntervalSetSpace>);
static_assert(AverageableSpace<RealSpace>);

// O_n(F, x): the space's weighted average of the samples F(x_{n,i}) with
// the scheme's weights at x.
template <AverageableSpace S, class Fn>
    requires std::invocable<const Fn&, const Rational&>
typename S::Point positive_operator(const Fn& f, const WeightScheme& scheme, unsigned n, const Rational& x,
                                    const S& space) {
    if (x.sign() < 0 || Rational(1) < x) throw std::invalid_argument("operator argument outside [0,1]");
    const auto nodes = scheme.nodes(n);
    std::vector<typename S::Point> samples;
    samples.reserve(nodes.size());
    for (const auto& node : nodes) samples.push_back(f(node));
    return space.weighted_average(samples, scheme.weights(n, x));
}

IntervalSet bernstein_svf(const SampledSVF& f, unsigned n, const Rational& x, const AverageConfig& cfg = {});

// de Casteljau recursion in which every binary average is taken over the
// partition of all samples F(i/n) plus the two averaged sets.
IntervalSet decasteljau_svf(const SampledSVF& f, unsigned n, const Rational& x, const AverageConfig& cfg = {});

// de Casteljau recursion with plain two-set partition averages. Differs from
// the Bernstein operator and is not expected to converge.
IntervalSet decasteljau_naive(const SampledSVF& f, unsigned n, const Rational& x, const AverageConfig& cfg = {});

// Tail-sum condition sum_{i>=k} alpha_i <= sum_{i>=k} beta_i for every k.
bool dominance_holds(const WeightVector& alpha, const WeightVector& beta);

// For a pair violating dominance, the step sequence
// A_0 = ... = A_{k-1} = [0,1] c A_k = ... = A_n = [0,2] at the first
// violating tail index k; the alpha-average of it is not contained in the
// beta-average. Empty when dominance holds.
std::optional<std::vector<IntervalSet>> monotonicity_witness(const WeightVector& alpha, const WeightVector& beta);

// Finite-difference speeds d(O_n(F, x_k), O_n(F, x_{k+1})) / (x_{k+1} - x_k)
// along a sorted grid. Throws std::invalid_argument when the samples of F at
// the scheme nodes are not nested.
std::vector<Rational> speed_profile(const SampledSVF& f, const WeightScheme& scheme, unsigned n,
                                    std::span<const Rational> grid, const AverageConfig& cfg = {});

// |O~_n(mu o F, x_{k+1}) - O~_n(mu o F, x_k)| / (x_{k+1} - x_k).
std::vector<Rational> measure_speed_profile(const SampledSVF& f, const WeightScheme& scheme, unsigned n,
                                            std::span<const Rational> grid);

}  // namespace setavg
