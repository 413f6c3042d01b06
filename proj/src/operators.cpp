#include "setavg/operators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace setavg {

namespace {

void check_unit(const Rational& x) {
    if (x.sign() < 0 || Rational(1) < x) throw std::invalid_argument("argument outside [0,1]: " + x.to_string());
}

std::vector<Rational> uniform_nodes(unsigned n) {
    if (n == 0) throw std::invalid_argument("operator degree must be at least 1");
    std::vector<Rational> nodes;
    nodes.reserve(n + 1);
    for (unsigned i = 0; i <= n; ++i) nodes.emplace_back(static_cast<long>(i), static_cast<long>(n));
    return nodes;
}

bool nested_chain(std::span<const IntervalSet> values) {
    bool up = true, down = true;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        up = up && contains_ae(values[i + 1], values[i]);
        down = down && contains_ae(values[i], values[i + 1]);
    }
    return up || down;
}

}  // namespace

bool holder_spot_check(const SampledSVF& f, std::uint64_t seed, int pairs) {
    if (!f.holder) return true;
    const double constant = f.holder->constant.to_double();
    const double exponent = f.holder->exponent.to_double();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> pick(0, 1 << 20);
    for (int k = 0; k < pairs; ++k) {
        const Rational x(pick(rng), 1L << 20);
        const Rational y(pick(rng), 1L << 20);
        const double lhs = sym_diff_distance(f(x), f(y)).to_double();
        const double rhs = constant * std::pow(abs(x - y).to_double(), exponent);
        if (lhs > rhs + 1e-9) return false;
    }
    return true;
}

WeightVector bernstein_weights(unsigned n, const Rational& x) {
    check_unit(x);
    const Rational y = Rational(1) - x;
    std::vector<Rational> w;
    w.reserve(n + 1);
    for (unsigned i = 0; i <= n; ++i) w.push_back(binomial(n, i) * pow(x, i) * pow(y, n - i));
    return WeightVector(std::move(w));
}

WeightVector piecewise_linear_weights(unsigned n, const Rational& x) {
    check_unit(x);
    if (n == 0) throw std::invalid_argument("operator degree must be at least 1");
    const Rational scaled = x * Rational(static_cast<long>(n));
    long k = floor(scaled).get_si();
    if (k == static_cast<long>(n)) k = static_cast<long>(n) - 1;
    std::vector<Rational> w(n + 1);
    w[k + 1] = scaled - Rational(k);
    w[k] = Rational(1) - w[k + 1];
    return WeightVector(std::move(w));
}

WeightScheme WeightScheme::bernstein() {
    return {"bernstein", uniform_nodes, [](unsigned n, const Rational& x) { return bernstein_weights(n, x); }};
}

WeightScheme WeightScheme::piecewise_linear() {
    return {"pl", uniform_nodes, [](unsigned n, const Rational& x) { return piecewise_linear_weights(n, x); }};
}

WeightScheme WeightScheme::reversed_bernstein() {
    return {"reversed-bernstein", uniform_nodes, [](unsigned n, const Rational& x) {
                check_unit(x);
                return bernstein_weights(n, Rational(1) - x);
            }};
}

Rational bernstein_real(const std::function<Rational(const Rational&)>& f, unsigned n, const Rational& x) {
    auto fn = [&f](const Rational& t) { return f(t); };
    return positive_operator(fn, WeightScheme::bernstein(), n, x, RealSpace{});
}

Rational RealSpace::weighted_average(std::span<const Rational> points, const WeightVector& w) const {
    if (points.size() != w.size()) throw std::invalid_argument("weight/point count mismatch");
    Rational sum;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (!w[i].is_zero()) sum += w[i] * points[i];
    return sum;
}

IntervalSet bernstein_svf(const SampledSVF& f, unsigned n, const Rational& x, const AverageConfig& cfg) {
    return positive_operator(f, WeightScheme::bernstein(), n, x, IntervalSetSpace{cfg});
}

IntervalSet decasteljau_svf(const SampledSVF& f, unsigned n, const Rational& x, const AverageConfig& cfg) {
    check_unit(x);
    const auto nodes = uniform_nodes(n);
    // sets[0..n] are the samples; the last two slots take the averaged pair.
    std::vector<IntervalSet> sets;
    sets.reserve(n + 3);
    for (const auto& node : nodes) sets.push_back(f(node));
    sets.resize(n + 3);

    std::vector<Rational> entries(n + 3);
    entries[n + 1] = Rational(1) - x;
    entries[n + 2] = x;
    const WeightVector w(std::move(entries));

    std::vector<IntervalSet> level(sets.begin(), sets.begin() + n + 1);
    for (unsigned k = n; k-- > 0;) {
        std::vector<IntervalSet> next;
        next.reserve(k + 1);
        for (unsigned i = 0; i <= k; ++i) {
            sets[n + 1] = level[i];
            sets[n + 2] = level[i + 1];
            next.push_back(partition_average(sets, w, cfg));
        }
        level = std::move(next);
    }
    return level.front();
}

IntervalSet decasteljau_naive(const SampledSVF& f, unsigned n, const Rational& x, const AverageConfig& cfg) {
    check_unit(x);
    std::vector<IntervalSet> level;
    for (const auto& node : uniform_nodes(n)) level.push_back(f(node));
    const WeightVector w({Rational(1) - x, x});
    for (unsigned k = n; k-- > 0;) {
        std::vector<IntervalSet> next;
        for (unsigned i = 0; i <= k; ++i) {
            const IntervalSet pair[] = {level[i], level[i + 1]};
            next.push_back(partition_average(pair, w, cfg));
        }
        level = std::move(next);
    }
    return level.front();
}

bool dominance_holds(const WeightVector& alpha, const WeightVector& beta) {
    if (alpha.size() != beta.size()) throw std::invalid_argument("dominance test on vectors of different length");
    Rational tail_alpha, tail_beta;
    for (std::size_t k = alpha.size(); k-- > 0;) {
        tail_alpha += alpha[k];
        tail_beta += beta[k];
        if (tail_beta < tail_alpha) return false;
    }
    return true;
}

std::optional<std::vector<IntervalSet>> monotonicity_witness(const WeightVector& alpha, const WeightVector& beta) {
    if (alpha.size() != beta.size()) throw std::invalid_argument("dominance test on vectors of different length");
    Rational tail_alpha, tail_beta;
    for (std::size_t k = alpha.size(); k-- > 0;) {
        tail_alpha += alpha[k];
        tail_beta += beta[k];
        if (tail_beta < tail_alpha) {
            std::vector<IntervalSet> steps(alpha.size(), IntervalSet::single(0, 1));
            for (std::size_t i = k; i < steps.size(); ++i) steps[i] = IntervalSet::single(0, 2);
            return steps;
        }
    }
    return std::nullopt;
}

std::vector<Rational> speed_profile(const SampledSVF& f, const WeightScheme& scheme, unsigned n,
                                    std::span<const Rational> grid, const AverageConfig& cfg) {
    std::vector<IntervalSet> samples;
    for (const auto& node : scheme.nodes(n)) samples.push_back(f(node));
    if (!nested_chain(samples)) throw std::invalid_argument("speed profile of a non-monotone set-valued function");

    const IntervalSetSpace space{cfg};
    std::vector<IntervalSet> values;
    values.reserve(grid.size());
    for (const auto& x : grid) values.push_back(positive_operator(f, scheme, n, x, space));

    std::vector<Rational> speeds;
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        if (!(grid[k] < grid[k + 1])) throw std::invalid_argument("speed profile grid must be increasing");
        speeds.push_back(sym_diff_distance(values[k], values[k + 1]) / (grid[k + 1] - grid[k]));
    }
    return speeds;
}

std::vector<Rational> measure_speed_profile(const SampledSVF& f, const WeightScheme& scheme, unsigned n,
                                            std::span<const Rational> grid) {
    auto mu_f = [&f](const Rational& x) { return measure(f(x)); };
    std::vector<Rational> values;
    for (const auto& x : grid) values.push_back(positive_operator(mu_f, scheme, n, x, RealSpace{}));
    std::vector<Rational> speeds;
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        if (!(grid[k] < grid[k + 1])) throw std::invalid_argument("speed profile grid must be increasing");
        speeds.push_back(abs(values[k + 1] - values[k]) / (grid[k + 1] - grid[k]));
    }
    return speeds;
}

}  // namespace setavg
