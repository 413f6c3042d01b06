#include "setavg/partition.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace setavg {

Signature Signature::of(std::size_t universe, std::initializer_list<std::size_t> members) {
    Signature s(universe);
    for (auto i : members) {
        if (i >= universe) throw std::out_of_range("signature member outside the index set");
        s.insert(i);
    }
    return s;
}

bool Signature::none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<std::size_t> Signature::members() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

WeightVector::WeightVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
    Rational sum;
    for (const auto& e : entries_) {
        if (e.sign() < 0) throw std::invalid_argument("negative weight " + e.to_string());
        sum += e;
    }
    if (sum != Rational(1)) throw std::invalid_argument("weights sum to " + sum.to_string() + ", not 1");
}

WeightVector WeightVector::indicator(std::size_t size, std::size_t j) {
    if (j >= size) throw std::out_of_range("indicator position outside the weight vector");
    std::vector<Rational> e(size);
    e[j] = Rational(1);
    return WeightVector(std::move(e));
}

WeightVector WeightVector::uniform(std::size_t size) {
    if (size == 0) throw std::invalid_argument("uniform weights over no entries");
    return WeightVector(std::vector<Rational>(size, Rational(1, static_cast<long>(size))));
}

Partition partition_of_union(std::span<const IntervalSet> sets) {
    if (sets.empty()) throw std::invalid_argument("partition of an empty list of sets");

    struct Event {
        Rational at;
        std::size_t set;
        bool opens;
    };
    std::vector<Event> events;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (const auto& iv : sets[i].intervals()) {
            events.push_back({iv.lo, i, true});
            events.push_back({iv.hi, i, false});
        }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.at < b.at; });

    std::map<Signature, std::vector<Interval>> groups;
    Signature current(sets.size());
    std::size_t open_count = 0;
    for (std::size_t e = 0; e < events.size();) {
        const Rational& at = events[e].at;
        while (e < events.size() && events[e].at == at) {
            if (events[e].opens) {
                current.insert(events[e].set);
                ++open_count;
            } else {
                current.erase(events[e].set);
                --open_count;
            }
            ++e;
        }
        if (open_count > 0 && e < events.size()) groups[current].push_back({at, events[e].at});
    }

    Partition out;
    out.sets.assign(sets.begin(), sets.end());
    for (auto& [sig, pieces] : groups)
        out.elements.push_back({sig, IntervalSet::canonicalize(std::move(pieces))});
    std::sort(out.elements.begin(), out.elements.end(), [](const PartitionElement& a, const PartitionElement& b) {
        return a.region.lower() < b.region.lower();
    });
    return out;
}

namespace {

Rational coverage_of(const Signature& sig, const WeightVector& w) {
    Rational sum;
    for (auto i : sig.members()) sum += w[i];
    return sum;
}

void check_lengths(std::size_t sets, const WeightVector& w) {
    if (sets != w.size())
        throw std::invalid_argument("weight vector has " + std::to_string(w.size()) + " entries for " +
                                    std::to_string(sets) + " sets");
}

// Measure of A n [p - r, p + r].
Rational ball_measure(const IntervalSet& a, const Rational& p, const Rational& r) {
    const Rational left = p - r;
    const Rational right = p + r;
    Rational total;
    for (const auto& iv : a.intervals()) {
        const Rational lo = max(iv.lo, left);
        const Rational hi = min(iv.hi, right);
        if (lo < hi) total += hi - lo;
    }
    return total;
}

}  // namespace

std::vector<std::pair<Signature, Rational>> coverage_values(const Partition& partition, const WeightVector& w) {
    check_lengths(partition.sets.size(), w);
    std::vector<std::pair<Signature, Rational>> out;
    out.reserve(partition.elements.size());
    for (const auto& el : partition.elements) out.emplace_back(el.signature, coverage_of(el.signature, w));
    return out;
}

IntervalSet subset_generate(const IntervalSet& a, const Rational& t, const Rational& p) {
    if (t.sign() < 0 || Rational(1) < t) throw std::invalid_argument("subset fraction outside [0,1]: " + t.to_string());
    if (t.is_zero() || a.empty()) return {};
    if (t == Rational(1)) return a;

    const Rational target = t * measure(a);

    // r -> mu(Bl(p, r) n A) is piecewise linear with kinks at the distances
    // from p to the interval endpoints.
    std::vector<Rational> radii{Rational(0)};
    for (const auto& iv : a.intervals()) {
        radii.push_back(abs(iv.lo - p));
        radii.push_back(abs(iv.hi - p));
    }
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

    Rational prev_r = radii.front();
    Rational prev_m;
    for (std::size_t k = 1; k < radii.size(); ++k) {
        Rational m = ball_measure(a, p, radii[k]);
        if (target <= m) {
            // prev_m < target <= m, so the slope on this piece is positive.
            const Rational slope = (m - prev_m) / (radii[k] - prev_r);
            const Rational r = prev_r + (target - prev_m) / slope;
            return intersect(a, IntervalSet::single(p - r, p + r));
        }
        prev_r = radii[k];
        prev_m = std::move(m);
    }
    return a;  // unreachable for t < 1: the last radius covers A
}

IntervalSet partition_average(const Partition& partition, const WeightVector& w, const AverageConfig& cfg) {
    check_lengths(partition.sets.size(), w);
    if (partition.elements.empty()) return {};

    Rational shared_point = cfg.point;
    if (cfg.kind == AverageConfig::Kind::CentroidOfUnion) {
        std::vector<IntervalSet> regions;
        regions.reserve(partition.elements.size());
        for (const auto& el : partition.elements) regions.push_back(el.region);
        shared_point = centroid(set_union(regions));
    }

    std::vector<Interval> pieces;
    for (const auto& el : partition.elements) {
        const Rational t = coverage_of(el.signature, w);
        const Rational& p = cfg.kind == AverageConfig::Kind::PerElementCentroid ? centroid(el.region) : shared_point;
        const IntervalSet part = subset_generate(el.region, t, p);
        pieces.insert(pieces.end(), part.intervals().begin(), part.intervals().end());
    }
    return IntervalSet::canonicalize(std::move(pieces));
}

IntervalSet partition_average(std::span<const IntervalSet> sets, const WeightVector& w, const AverageConfig& cfg) {
    check_lengths(sets.size(), w);
    return partition_average(partition_of_union(sets), w, cfg);
}

IntervalSet partition_expectation(std::span<const IntervalSet> sets, const WeightVector& probabilities,
                                  const AverageConfig& cfg) {
    return partition_average(sets, probabilities, cfg);
}

Rational expected_pairwise_distance(std::span<const IntervalSet> sets, const WeightVector& alpha,
                                    const WeightVector& beta) {
    check_lengths(sets.size(), alpha);
    check_lengths(sets.size(), beta);
    Rational total;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (alpha[i].is_zero()) continue;
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (beta[j].is_zero()) continue;
            total += alpha[i] * beta[j] * sym_diff_distance(sets[i], sets[j]);
        }
    }
    return total;
}

Rational expected_pairwise_distance_coverage(std::span<const IntervalSet> sets, const WeightVector& alpha,
                                             const WeightVector& beta) {
    check_lengths(sets.size(), alpha);
    check_lengths(sets.size(), beta);
    const Partition partition = partition_of_union(sets);
    const Rational one(1);
    Rational total;
    for (const auto& el : partition.elements) {
        const Rational p1 = coverage_of(el.signature, alpha);
        const Rational p2 = coverage_of(el.signature, beta);
        total += (p1 * (one - p2) + p2 * (one - p1)) * measure(el.region);
    }
    return total;
}

Rational average_distance_integral(std::span<const IntervalSet> sets, const WeightVector& alpha,
                                   const WeightVector& beta) {
    check_lengths(sets.size(), alpha);
    check_lengths(sets.size(), beta);
    const Partition partition = partition_of_union(sets);
    Rational total;
    for (const auto& el : partition.elements)
        total += abs(coverage_of(el.signature, alpha) - coverage_of(el.signature, beta)) * measure(el.region);
    return total;
}

}  // namespace setavg
