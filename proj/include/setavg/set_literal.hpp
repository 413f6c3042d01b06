#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "setavg/interval_set.hpp"

namespace setavg {

// Text literal for interval sets: a JSON array of two-element arrays whose
// entries are exact numbers written as strings ("p/q" or a finite decimal),
// e.g. [["0","1"],["5/2","3"]]. Bare JSON integers are accepted as well.

IntervalSet set_from_json(const nlohmann::json& j);
nlohmann::json set_to_json(const IntervalSet& s);

IntervalSet parse_set_literal(std::string_view text);
std::string format_set_literal(const IntervalSet& s);

// A JSON array of set literals.
std::vector<IntervalSet> parse_set_list(std::string_view text);

Rational rational_from_json(const nlohmann::json& j);

// Comma-separated rationals, e.g. "1/3,1/3,1/3".
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace setavg
