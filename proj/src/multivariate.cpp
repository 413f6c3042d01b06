#include "setavg/multivariate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace setavg {

namespace {

constexpr unsigned kDiameterBits = 40;

Triangle ccw(const std::vector<Point2>& pts, std::size_t a, std::size_t b, std::size_t c) {
    if (orient(pts[a], pts[b], pts[c]).sign() < 0) return {a, c, b};
    return {a, b, c};
}

Rational max_squared_circumdiameter(const Triangulation& t) {
    Rational best;
    for (const auto& tri : t.triangles)
        best = max(best, squared_circumdiameter(t.points[tri[0]], t.points[tri[1]], t.points[tri[2]]));
    return best;
}

// Lawson flips until every interior edge is locally Delaunay. Only strict
// in-circle violations flip, which guarantees termination on cocircular input.
void make_delaunay(const std::vector<Point2>& pts, std::vector<Triangle>& tris) {
    bool flipped = true;
    while (flipped) {
        flipped = false;
        std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, int>> edges;
        for (std::size_t t = 0; t < tris.size(); ++t)
            for (int e = 0; e < 3; ++e) edges[{tris[t][e], tris[t][(e + 1) % 3]}] = {t, e};

        for (std::size_t t = 0; t < tris.size() && !flipped; ++t) {
            for (int e = 0; e < 3 && !flipped; ++e) {
                const std::size_t a = tris[t][e], b = tris[t][(e + 1) % 3], c = tris[t][(e + 2) % 3];
                auto it = edges.find({b, a});
                if (it == edges.end()) continue;
                const auto [u, f] = it->second;
                const std::size_t d = tris[u][(f + 2) % 3];
                if (incircle(pts[a], pts[b], pts[c], pts[d]).sign() > 0) {
                    tris[t] = {a, d, c};
                    tris[u] = {d, b, c};
                    flipped = true;
                }
            }
        }
    }
}

// Andrew's monotone chain on exact points; collinear points dropped.
std::vector<Point2> convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Point2> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]).sign() <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]).sign() <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

}  // namespace

Rational orient(const Point2& a, const Point2& b, const Point2& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

Rational incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    const Rational ax = a.x - d.x, ay = a.y - d.y;
    const Rational bx = b.x - d.x, by = b.y - d.y;
    const Rational cx = c.x - d.x, cy = c.y - d.y;
    const Rational a2 = ax * ax + ay * ay, b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
    return ax * (by * c2 - b2 * cy) - ay * (bx * c2 - b2 * cx) + a2 * (bx * cy - by * cx);
}

Rational squared_circumdiameter(const Point2& a, const Point2& b, const Point2& c) {
    auto sq = [](const Point2& p, const Point2& q) {
        const Rational dx = p.x - q.x, dy = p.y - q.y;
        return dx * dx + dy * dy;
    };
    const Rational o = orient(a, b, c);
    if (o.is_zero()) throw std::domain_error("circumcircle of a degenerate triangle");
    // D = |ab| |bc| |ca| / (2 area) and 2 area = |orient|.
    return sq(a, b) * sq(b, c) * sq(c, a) / (o * o);
}

Triangulation triangulate(std::vector<Point2> points) {
    if (points.size() < 3) throw std::invalid_argument("triangulation needs at least three points");
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (points[order[i]] == points[order[i + 1]]) throw std::invalid_argument("duplicate points in triangulation");

    const auto& P = points;
    std::size_t m = 2;
    while (m < order.size() && orient(P[order[0]], P[order[1]], P[order[m]]).is_zero()) ++m;
    if (m == order.size()) throw std::invalid_argument("all points are collinear");

    std::vector<Triangle> tris;
    for (std::size_t j = 0; j + 1 < m; ++j) tris.push_back(ccw(P, order[j], order[j + 1], order[m]));

    // Counter-clockwise hull of the processed prefix, collinear vertices kept.
    std::vector<std::size_t> hull;
    if (orient(P[order[0]], P[order[1]], P[order[m]]).sign() > 0) {
        for (std::size_t j = 0; j < m; ++j) hull.push_back(order[j]);
    } else {
        for (std::size_t j = m; j-- > 0;) hull.push_back(order[j]);
    }
    hull.push_back(order[m]);

    for (std::size_t k = m + 1; k < order.size(); ++k) {
        const std::size_t q = order[k];
        const std::size_t h = hull.size();
        std::vector<bool> visible(h);
        for (std::size_t i = 0; i < h; ++i)
            visible[i] = orient(P[hull[i]], P[hull[(i + 1) % h]], P[q]).sign() < 0;

        std::size_t start = 0;
        while (!(visible[start] && !visible[(start + h - 1) % h])) ++start;
        std::size_t end = start;
        while (visible[(end + 1) % h]) end = (end + 1) % h;

        for (std::size_t i = start;; i = (i + 1) % h) {
            tris.push_back({hull[(i + 1) % h], hull[i], q});
            if (i == end) break;
        }

        std::vector<std::size_t> next;
        for (std::size_t i = (end + 1) % h;; i = (i + 1) % h) {
            next.push_back(hull[i]);
            if (i == start) break;
        }
        next.push_back(q);
        hull = std::move(next);
    }

    make_delaunay(P, tris);

    Triangulation out{std::move(points), std::move(tris), {}};
    out.mesh_diameter = sqrt_ceil_dyadic(max_squared_circumdiameter(out), kDiameterBits);
    return out;
}

Triangulation refine(const Triangulation& t) {
    Triangulation out;
    out.points = t.points;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> midpoint;
    auto mid = [&](std::size_t a, std::size_t b) {
        const auto key = std::minmax(a, b);
        auto [it, inserted] = midpoint.try_emplace({key.first, key.second}, out.points.size());
        if (inserted) {
            const Rational half(1, 2);
            out.points.push_back({(t.points[a].x + t.points[b].x) * half, (t.points[a].y + t.points[b].y) * half});
        }
        return it->second;
    };
    for (const auto& [a, b, c] : t.triangles) {
        const std::size_t ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
        out.triangles.push_back({a, ab, ca});
        out.triangles.push_back({ab, b, bc});
        out.triangles.push_back({ca, bc, c});
        out.triangles.push_back({ab, bc, ca});
    }
    out.mesh_diameter = t.mesh_diameter / Rational(2);
    return out;
}

RefinementSequence RefinementSequence::build(Triangulation base, unsigned refinements) {
    RefinementSequence seq;
    seq.levels.push_back(std::move(base));
    for (unsigned k = 0; k < refinements; ++k) seq.levels.push_back(refine(seq.levels.back()));
    return seq;
}

std::vector<std::string> triangulation_violations(const Triangulation& t) {
    std::vector<std::string> issues;
    const auto& P = t.points;
    std::vector<bool> used(P.size(), false);
    std::map<std::pair<std::size_t, std::size_t>, int> directed;
    Rational area_sum;

    for (std::size_t k = 0; k < t.triangles.size(); ++k) {
        const auto& tri = t.triangles[k];
        if (std::any_of(tri.begin(), tri.end(), [&](std::size_t v) { return v >= P.size(); })) {
            issues.push_back("triangle " + std::to_string(k) + " references a missing point");
            continue;
        }
        const Rational o = orient(P[tri[0]], P[tri[1]], P[tri[2]]);
        if (o.sign() <= 0) issues.push_back("triangle " + std::to_string(k) + " is not counter-clockwise");
        area_sum += o;
        for (int e = 0; e < 3; ++e) {
            used[tri[e]] = true;
            if (++directed[{tri[e], tri[(e + 1) % 3]}] > 1)
                issues.push_back("edge used twice in the same direction");
        }
        if (o.sign() > 0) {
            if (t.mesh_diameter * t.mesh_diameter < squared_circumdiameter(P[tri[0]], P[tri[1]], P[tri[2]]))
                issues.push_back("mesh diameter below the circumdiameter of triangle " + std::to_string(k));
            // No other point inside the closed triangle.
            for (std::size_t v = 0; v < P.size(); ++v) {
                if (v == tri[0] || v == tri[1] || v == tri[2]) continue;
                if (orient(P[tri[0]], P[tri[1]], P[v]).sign() >= 0 && orient(P[tri[1]], P[tri[2]], P[v]).sign() >= 0 &&
                    orient(P[tri[2]], P[tri[0]], P[v]).sign() >= 0)
                    issues.push_back("point " + std::to_string(v) + " lies in triangle " + std::to_string(k));
            }
        }
    }
    for (std::size_t v = 0; v < P.size(); ++v)
        if (!used[v]) issues.push_back("point " + std::to_string(v) + " is not a vertex");

    // Boundary edges must be supporting lines of the point set.
    for (const auto& [edge, count] : directed) {
        if (directed.count({edge.second, edge.first})) continue;
        for (const auto& p : P)
            if (orient(P[edge.first], P[edge.second], p).sign() < 0) {
                issues.push_back("boundary edge is not on the convex hull");
                break;
            }
    }

    const auto hull = convex_hull(P);
    Rational hull_area;
    for (std::size_t i = 1; i + 1 < hull.size(); ++i) hull_area += orient(hull[0], hull[i], hull[i + 1]);
    if (area_sum != hull_area) issues.push_back("triangles do not tile the convex hull");
    return issues;
}

bool is_locally_delaunay(const Triangulation& t) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> opposite;
    for (const auto& tri : t.triangles)
        for (int e = 0; e < 3; ++e) opposite[{tri[e], tri[(e + 1) % 3]}] = tri[(e + 2) % 3];
    for (const auto& tri : t.triangles)
        for (int e = 0; e < 3; ++e) {
            const std::size_t a = tri[e], b = tri[(e + 1) % 3], c = tri[(e + 2) % 3];
            auto it = opposite.find({b, a});
            if (it == opposite.end()) continue;
            if (incircle(t.points[a], t.points[b], t.points[c], t.points[it->second]).sign() > 0) return false;
        }
    return true;
}

std::optional<std::size_t> locate(const Triangulation& t, const Point2& p) {
    for (std::size_t k = 0; k < t.triangles.size(); ++k) {
        const auto& [a, b, c] = t.triangles[k];
        if (orient(t.points[a], t.points[b], p).sign() >= 0 && orient(t.points[b], t.points[c], p).sign() >= 0 &&
            orient(t.points[c], t.points[a], p).sign() >= 0)
            return k;
    }
    return std::nullopt;
}

WeightVector barycentric_weights(const Triangulation& t, const Point2& p) {
    const auto k = locate(t, p);
    if (!k) throw std::invalid_argument("query point outside the triangulated domain");
    const auto& [a, b, c] = t.triangles[*k];
    const auto& P = t.points;
    const Rational total = orient(P[a], P[b], P[c]);
    std::vector<Rational> w(P.size());
    w[a] = orient(p, P[b], P[c]) / total;
    w[b] = orient(P[a], p, P[c]) / total;
    w[c] = orient(P[a], P[b], p) / total;
    return WeightVector(std::move(w));
}

IntervalSet pl_interpolant_svf(const PlanarSVF& f, const Triangulation& t, const Point2& p, const AverageConfig& cfg) {
    const WeightVector w = barycentric_weights(t, p);
    std::vector<IntervalSet> samples;
    samples.reserve(t.points.size());
    for (const auto& q : t.points) samples.push_back(f(q));
    return partition_average(samples, w, cfg);
}

IntervalSet pl_interpolant_zero_stripped(const PlanarSVF& f, const Triangulation& t, const Point2& p,
                                         const AverageConfig& cfg) {
    const WeightVector w = barycentric_weights(t, p);
    std::vector<IntervalSet> samples;
    std::vector<Rational> kept;
    for (std::size_t i = 0; i < t.points.size(); ++i) {
        if (w[i].is_zero()) continue;
        samples.push_back(f(t.points[i]));
        kept.push_back(w[i]);
    }
    return partition_average(samples, WeightVector(std::move(kept)), cfg);
}

}  // namespace setavg
