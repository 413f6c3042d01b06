#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "setavg/rational.hpp"

namespace setavg {

struct Interval {
    Rational lo;
    Rational hi;

    Rational length() const { return hi - lo; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

// A finite union of closed rational intervals in canonical regular-compact
// form: every interval has positive length, intervals are sorted and
// separated by strictly positive gaps. The empty union is the empty set,
// the only element of measure zero. All predicates hold modulo null sets.
class IntervalSet {
public:
    IntervalSet() = default;

    // Builds the canonical form of an arbitrary list of (a, b) pairs with
    // a <= b: degenerate pairs vanish, overlapping or touching pairs merge.
    static IntervalSet canonicalize(std::vector<Interval> raw);
    static IntervalSet canonicalize(std::initializer_list<std::pair<Rational, Rational>> raw);
    static IntervalSet single(const Rational& lo, const Rational& hi);

    std::span<const Interval> intervals() const { return intervals_; }
    bool empty() const { return intervals_.empty(); }
    std::size_t size() const { return intervals_.size(); }

    // Smallest and largest point; the set must be nonempty.
    const Rational& lower() const;
    const Rational& upper() const;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<Interval> intervals_;
};

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_union(std::span<const IntervalSet> sets);
IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet difference(const IntervalSet& a, const IntervalSet& b);

Rational measure(const IntervalSet& a);
// mu(A \ B) + mu(B \ A).
Rational sym_diff_distance(const IntervalSet& a, const IntervalSet& b);
// True iff B is contained in A up to a null set.
bool contains_ae(const IntervalSet& a, const IntervalSet& b);
// Center of mass; throws std::domain_error on the empty set.
Rational centroid(const IntervalSet& a);

// Human-readable "[0,1] u [5/2,3]" rendering; "{}" for the empty set.
std::string to_display_string(const IntervalSet& a);

}  // namespace setavg
