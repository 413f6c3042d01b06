#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "setavg/interval_set.hpp"
#include "setavg/rational.hpp"

namespace setavg {

// Subset of the input indices {0, ..., n}, stored as a bit set.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::size_t universe) : words_((universe + 63) / 64, 0) {}
    static Signature of(std::size_t universe, std::initializer_list<std::size_t> members);

    void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void erase(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool contains(std::size_t i) const {
        return i / 64 < words_.size() && (words_[i / 64] >> (i % 64)) & 1u;
    }
    bool none() const;
    std::vector<std::size_t> members() const;

    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature&, const Signature&) = default;

private:
    std::vector<std::uint64_t> words_;
};

struct PartitionElement {
    Signature signature;
    IntervalSet region;
};

// The partition of the union of A_0, ..., A_n: one element per nonempty
// locus covered by exactly the sets named in its signature. Elements are
// ordered by the left end of their region.
struct Partition {
    std::vector<IntervalSet> sets;
    std::vector<PartitionElement> elements;
};

// Convex weights: nonnegative rationals summing to exactly one.
class WeightVector {
public:
    WeightVector() = default;
    // Throws std::invalid_argument on negative entries or a sum other than 1.
    explicit WeightVector(std::vector<Rational> entries);
    // Weight 1 at position j, zero elsewhere.
    static WeightVector indicator(std::size_t size, std::size_t j);
    static WeightVector uniform(std::size_t size);

    std::span<const Rational> entries() const { return entries_; }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    std::size_t size() const { return entries_.size(); }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<Rational> entries_;
};

// Choice of the ball center used by the subset-generating function.
struct AverageConfig {
    enum class Kind { CentroidOfUnion, FixedPoint, PerElementCentroid };

    Kind kind = Kind::CentroidOfUnion;
    Rational point;  // used by FixedPoint only

    static AverageConfig centroid_of_union() { return {}; }
    static AverageConfig fixed(Rational p) { return {Kind::FixedPoint, std::move(p)}; }
    static AverageConfig per_element() { return {Kind::PerElementCentroid, {}}; }
};

// Sweep over the sorted interval endpoints; throws on an empty input list.
Partition partition_of_union(std::span<const IntervalSet> sets);

// Coverage value sum_{i in signature} w_i of every partition element, in
// element order.
std::vector<std::pair<Signature, Rational>> coverage_values(const Partition& partition, const WeightVector& w);

// ci(Bl(p, r) n A) with the minimal radius r such that the measure is t mu(A).
IntervalSet subset_generate(const IntervalSet& a, const Rational& t, const Rational& p);

IntervalSet partition_average(std::span<const IntervalSet> sets, const WeightVector& w, const AverageConfig& cfg = {});
// Same as partition_average on an already computed partition.
IntervalSet partition_average(const Partition& partition, const WeightVector& w, const AverageConfig& cfg = {});

// Expectation of a discretely distributed random set taking the value
// sets[i] with probability probabilities[i].
IntervalSet partition_expectation(std::span<const IntervalSet> sets, const WeightVector& probabilities,
                                  const AverageConfig& cfg = {});

// E d(X1, X2) for independent X1 ~ alpha, X2 ~ beta, as the double sum
// sum_{i,j} alpha_i beta_j d(A_i, A_j).
Rational expected_pairwise_distance(std::span<const IntervalSet> sets, const WeightVector& alpha,
                                    const WeightVector& beta);
// The same expectation integrated from coverage values:
// sum over elements of [p1 (1 - p2) + p2 (1 - p1)] mu(region).
Rational expected_pairwise_distance_coverage(std::span<const IntervalSet> sets, const WeightVector& alpha,
                                             const WeightVector& beta);

// sum over elements of |p1 - p2| mu(region); equals the distance between
// the alpha- and beta-averages taken with a common configuration.
Rational average_distance_integral(std::span<const IntervalSet> sets, const WeightVector& alpha,
                                   const WeightVector& beta);

}  // namespace setavg
