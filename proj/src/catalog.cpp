#include "setavg/catalog.hpp"

#include <stdexcept>

namespace setavg {

namespace {

constexpr unsigned kSqrtBits = 60;

}  // namespace

SampledSVF builtin_svf(std::string_view name) {
    const Rational one(1);
    if (name == "grow")
        return {"grow", [](const Rational& x) { return IntervalSet::single(0, Rational(1) + x); },
                HolderClass{one, one}};
    if (name == "slide")
        return {"slide", [](const Rational& x) { return IntervalSet::single(x, Rational(1) + x); },
                HolderClass{Rational(2), one}};
    if (name == "split")
        return {"split",
                [](const Rational& x) {
                    return IntervalSet::canonicalize({{Rational(0), Rational(1)}, {Rational(2), Rational(2) + x}});
                },
                HolderClass{one, one}};
    if (name == "holder")
        return {"holder",
                [](const Rational& x) {
                    return IntervalSet::single(0, Rational(1) + sqrt_floor_dyadic(x, kSqrtBits));
                },
                HolderClass{one, Rational(1, 2)}};
    if (name == "constant")
        return {"constant", [](const Rational&) { return IntervalSet::single(0, 1); }, HolderClass{Rational(0), one}};
    throw std::invalid_argument("unknown built-in set-valued function: " + std::string(name));
}

std::vector<std::string> builtin_svf_names() { return {"grow", "slide", "split", "holder", "constant"}; }

PlanarSVF builtin_planar_svf(std::string_view name) {
    if (name == "plane")
        return {"plane", [](const Point2& p) { return IntervalSet::single(0, Rational(1) + p.x + p.y); },
                sqrt_ceil_dyadic(Rational(2), kSqrtBits), Rational(1)};
    throw std::invalid_argument("unknown built-in planar set-valued function: " + std::string(name));
}

}  // namespace setavg
