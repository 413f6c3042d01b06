#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "setavg/interval_set.hpp"
#include "setavg/partition.hpp"
#include "setavg/rational.hpp"
#include "setavg/set_literal.hpp"

namespace doctest {
template <>
struct StringMaker<setavg::Rational> {
    static String convert(const setavg::Rational& r) { return r.to_string().c_str(); }
};
template <>
struct StringMaker<setavg::IntervalSet> {
    static String convert(const setavg::IntervalSet& s) { return setavg::format_set_literal(s).c_str(); }
};
}  // namespace doctest

namespace testgen {

using setavg::Interval;
using setavg::IntervalSet;
using setavg::Rational;
using setavg::WeightVector;

inline Rational R(long p, long q = 1) { return Rational(p, q); }

inline IntervalSet S(std::initializer_list<std::pair<Rational, Rational>> raw) {
    return IntervalSet::canonicalize(raw);
}

// Endpoints on the lattice k/denom, k in [0, span*denom].
struct SetGen {
    long denom = 8;
    long span = 8;
    int max_intervals = 3;

    IntervalSet operator()(std::mt19937_64& rng) const {
        std::uniform_int_distribution<int> count(1, max_intervals);
        std::uniform_int_distribution<long> pos(0, span * denom);
        for (;;) {
            std::vector<Interval> raw;
            const int k = count(rng);
            for (int i = 0; i < k; ++i) {
                long a = pos(rng), b = pos(rng);
                if (a > b) std::swap(a, b);
                raw.push_back({Rational(a, denom), Rational(b, denom)});
            }
            auto s = IntervalSet::canonicalize(std::move(raw));
            if (!s.empty()) return s;
        }
    }
};

// Positive integer numerators normalized to sum 1; zero entries with
// probability `zero_chance` (never all zero).
inline WeightVector random_weights(std::mt19937_64& rng, std::size_t size, double zero_chance = 0.0,
                                   long max_num = 12) {
    std::uniform_int_distribution<long> num(1, max_num);
    std::bernoulli_distribution zero(zero_chance);
    for (;;) {
        std::vector<long> raw(size);
        long total = 0;
        for (auto& r : raw) {
            r = zero(rng) ? 0 : num(rng);
            total += r;
        }
        if (total == 0) continue;
        std::vector<Rational> w;
        for (long r : raw) w.emplace_back(r, total);
        return WeightVector(std::move(w));
    }
}

inline std::vector<IntervalSet> random_sets(std::mt19937_64& rng, std::size_t count, const SetGen& gen = {}) {
    std::vector<IntervalSet> sets;
    for (std::size_t i = 0; i < count; ++i) sets.push_back(gen(rng));
    return sets;
}

inline Rational weighted_measure(const std::vector<IntervalSet>& sets, const WeightVector& w) {
    Rational total;
    for (std::size_t i = 0; i < sets.size(); ++i) total += w[i] * setavg::measure(sets[i]);
    return total;
}

}  // namespace testgen
