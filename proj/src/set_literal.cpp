#include "setavg/set_literal.hpp"

#include <stdexcept>

namespace setavg {

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("expected an exact number string, got " + j.dump());
}

IntervalSet set_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("set literal must be a JSON array");
    std::vector<Interval> raw;
    raw.reserve(j.size());
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("set literal entries must be two-element arrays");
        Rational lo = rational_from_json(pair[0]);
        Rational hi = rational_from_json(pair[1]);
        if (hi < lo) throw std::invalid_argument("interval with lo > hi in set literal");
        raw.push_back({std::move(lo), std::move(hi)});
    }
    return IntervalSet::canonicalize(std::move(raw));
}

nlohmann::json set_to_json(const IntervalSet& s) {
    auto out = nlohmann::json::array();
    for (const auto& iv : s.intervals()) out.push_back({iv.lo.to_string(), iv.hi.to_string()});
    return out;
}

IntervalSet parse_set_literal(std::string_view text) {
    return set_from_json(nlohmann::json::parse(text));
}

std::string format_set_literal(const IntervalSet& s) { return set_to_json(s).dump(); }

std::vector<IntervalSet> parse_set_list(std::string_view text) {
    auto j = nlohmann::json::parse(text);
    if (!j.is_array()) throw std::invalid_argument("expected a JSON array of set literals");
    std::vector<IntervalSet> sets;
    for (const auto& s : j) sets.push_back(set_from_json(s));
    return sets;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(Rational::parse(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace setavg
