#pragma once

#include <array>
#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "setavg/interval_set.hpp"
#include "setavg/partition.hpp"
#include "setavg/rational.hpp"

namespace setavg {

struct Point2 {
    Rational x;
    Rational y;

    friend bool operator==(const Point2&, const Point2&) = default;
    friend auto operator<=>(const Point2&, const Point2&) = default;
};

// Twice the signed area of (a, b, c); positive for counter-clockwise.
Rational orient(const Point2& a, const Point2& b, const Point2& c);
// Positive iff d lies strictly inside the circumcircle of the
// counter-clockwise triangle (a, b, c).
Rational incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d);
// Square of the circumscribed circle's diameter.
Rational squared_circumdiameter(const Point2& a, const Point2& b, const Point2& c);

using Triangle = std::array<std::size_t, 3>;

// Triangles are stored counter-clockwise. mesh_diameter is a rational upper
// bound on every circumscribed diameter.
struct Triangulation {
    std::vector<Point2> points;
    std::vector<Triangle> triangles;
    Rational mesh_diameter;
};

// Delaunay triangulation with exact predicates. Throws std::invalid_argument
// on fewer than three points, duplicates, or an all-collinear input.
Triangulation triangulate(std::vector<Point2> points);

// Midpoint subdivision: every edge midpoint is added and each triangle
// splits into four similar ones; the mesh diameter halves.
Triangulation refine(const Triangulation& t);

struct RefinementSequence {
    std::vector<Triangulation> levels;

    static RefinementSequence build(Triangulation base, unsigned refinements);
};

// Human-readable descriptions of violated triangulation axioms; empty when
// the mesh is a valid triangulation of its point set.
std::vector<std::string> triangulation_violations(const Triangulation& t);
// No point strictly inside the circumcircle across any interior edge.
bool is_locally_delaunay(const Triangulation& t);

// Index of the lowest-numbered triangle containing p, if any.
std::optional<std::size_t> locate(const Triangulation& t, const Point2& p);

// Area-ratio weights on the containing triangle, zero on every other point.
// Throws std::invalid_argument when p is outside the convex hull.
WeightVector barycentric_weights(const Triangulation& t, const Point2& p);

struct PlanarSVF {
    std::string name;
    std::function<IntervalSet(const Point2&)> evaluate;
    Rational holder_constant;  // Euclidean norm on the plane
    Rational holder_exponent;

    IntervalSet operator()(const Point2& p) const { return evaluate(p); }
};

// Partition average of F at all mesh points with barycentric weights.
IntervalSet pl_interpolant_svf(const PlanarSVF& f, const Triangulation& t, const Point2& p,
                               const AverageConfig& cfg = {});

// Partition average restricted to the points with nonzero weight.
IntervalSet pl_interpolant_zero_stripped(const PlanarSVF& f, const Triangulation& t, const Point2& p,
                                         const AverageConfig& cfg = {});

}  // namespace setavg
