#include "setavg/interval_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace setavg {

IntervalSet IntervalSet::canonicalize(std::vector<Interval> raw) {
    for (const auto& iv : raw)
        if (iv.hi < iv.lo) throw std::invalid_argument("interval with lo > hi");

    std::erase_if(raw, [](const Interval& iv) { return iv.lo == iv.hi; });
    std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

    IntervalSet out;
    for (auto& iv : raw) {
        if (!out.intervals_.empty() && iv.lo <= out.intervals_.back().hi) {
            auto& last = out.intervals_.back();
            if (last.hi < iv.hi) last.hi = std::move(iv.hi);
        } else {
            out.intervals_.push_back(std::move(iv));
        }
    }
    return out;
}

IntervalSet IntervalSet::canonicalize(std::initializer_list<std::pair<Rational, Rational>> raw) {
    std::vector<Interval> v;
    v.reserve(raw.size());
    for (const auto& [a, b] : raw) v.push_back({a, b});
    return canonicalize(std::move(v));
}

IntervalSet IntervalSet::single(const Rational& lo, const Rational& hi) {
    return canonicalize(std::vector<Interval>{{lo, hi}});
}

const Rational& IntervalSet::lower() const {
    if (intervals_.empty()) throw std::domain_error("lower bound of the empty set");
    return intervals_.front().lo;
}

const Rational& IntervalSet::upper() const {
    if (intervals_.empty()) throw std::domain_error("upper bound of the empty set");
    return intervals_.back().hi;
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> all(a.intervals().begin(), a.intervals().end());
    all.insert(all.end(), b.intervals().begin(), b.intervals().end());
    return IntervalSet::canonicalize(std::move(all));
}

IntervalSet set_union(std::span<const IntervalSet> sets) {
    std::vector<Interval> all;
    for (const auto& s : sets) all.insert(all.end(), s.intervals().begin(), s.intervals().end());
    return IntervalSet::canonicalize(std::move(all));
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
    auto x = a.intervals();
    auto y = b.intervals();
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        const Rational& lo = max(x[i].lo, y[j].lo);
        const Rational& hi = min(x[i].hi, y[j].hi);
        if (lo < hi) out.push_back({lo, hi});
        if (x[i].hi < y[j].hi) ++i;
        else ++j;
    }
    return IntervalSet::canonicalize(std::move(out));
}

IntervalSet difference(const IntervalSet& a, const IntervalSet& b) {
    auto y = b.intervals();
    std::vector<Interval> out;
    std::size_t j = 0;
    for (const auto& iv : a.intervals()) {
        Rational cursor = iv.lo;
        while (j < y.size() && y[j].hi <= cursor) ++j;
        std::size_t k = j;
        while (k < y.size() && y[k].lo < iv.hi) {
            if (cursor < y[k].lo) out.push_back({cursor, y[k].lo});
            cursor = max(cursor, y[k].hi);
            if (iv.hi <= cursor) break;
            ++k;
        }
        if (cursor < iv.hi) out.push_back({cursor, iv.hi});
    }
    return IntervalSet::canonicalize(std::move(out));
}

Rational measure(const IntervalSet& a) {
    Rational total;
    for (const auto& iv : a.intervals()) total += iv.length();
    return total;
}

Rational sym_diff_distance(const IntervalSet& a, const IntervalSet& b) {
    return measure(a) + measure(b) - Rational(2) * measure(intersect(a, b));
}

bool contains_ae(const IntervalSet& a, const IntervalSet& b) { return difference(b, a).empty(); }

Rational centroid(const IntervalSet& a) {
    if (a.empty()) throw std::domain_error("centroid of the empty set");
    Rational moment;
    for (const auto& iv : a.intervals()) moment += (iv.hi * iv.hi - iv.lo * iv.lo) / Rational(2);
    return moment / measure(a);
}

std::string to_display_string(const IntervalSet& a) {
    if (a.empty()) return "{}";
    std::ostringstream os;
    bool first = true;
    for (const auto& iv : a.intervals()) {
        if (!first) os << " u ";
        os << '[' << iv.lo << ',' << iv.hi << ']';
        first = false;
    }
    return os.str();
}

}  // namespace setavg
