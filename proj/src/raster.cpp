#include "setavg/raster.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace setavg {

namespace {

struct Bounds {
    Rational min_x, min_y, max_x, max_y;
};

Bounds bounds_of(const ShapeSpec& s) {
    return std::visit(
        [](const auto& shape) -> Bounds {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, TriangleShape>) {
                return {min(shape.a.x, min(shape.b.x, shape.c.x)), min(shape.a.y, min(shape.b.y, shape.c.y)),
                        max(shape.a.x, max(shape.b.x, shape.c.x)), max(shape.a.y, max(shape.b.y, shape.c.y))};
            } else if constexpr (std::is_same_v<T, RectangleShape>) {
                return {shape.lower.x, shape.lower.y, shape.upper.x, shape.upper.y};
            } else {
                return {shape.center.x - shape.semi_x, shape.center.y - shape.semi_y, shape.center.x + shape.semi_x,
                        shape.center.y + shape.semi_y};
            }
        },
        s);
}

bool inside(const ShapeSpec& s, const Point2& q) {
    return std::visit(
        [&q](const auto& shape) -> bool {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, TriangleShape>) {
                const int sign = orient(shape.a, shape.b, shape.c).sign();
                return orient(shape.a, shape.b, q).sign() * sign >= 0 && orient(shape.b, shape.c, q).sign() * sign >= 0 &&
                       orient(shape.c, shape.a, q).sign() * sign >= 0;
            } else if constexpr (std::is_same_v<T, RectangleShape>) {
                return shape.lower.x <= q.x && q.x <= shape.upper.x && shape.lower.y <= q.y && q.y <= shape.upper.y;
            } else {
                const Rational dx = (q.x - shape.center.x) / shape.semi_x;
                const Rational dy = (q.y - shape.center.y) / shape.semi_y;
                return dx * dx + dy * dy <= Rational(1);
            }
        },
        s);
}

void require_common_grid(std::span<const RasterSet> sets) {
    if (sets.empty()) throw std::invalid_argument("raster operation on an empty list");
    for (const auto& r : sets)
        if (!(r.grid() == sets.front().grid())) throw std::invalid_argument("rasters live on different grids");
}

std::string pgm_header(const GridSpec& g) {
    return "P5\n" + std::to_string(g.width) + " " + std::to_string(g.height) + "\n255\n";
}

template <class Gray>
std::string encode_image(const GridSpec& g, Gray gray) {
    std::string out = pgm_header(g);
    out.reserve(out.size() + g.width * g.height);
    for (std::size_t row = g.height; row-- > 0;)
        for (std::size_t col = 0; col < g.width; ++col) out.push_back(static_cast<char>(gray(row * g.width + col)));
    return out;
}

void write_bytes(const std::string& bytes, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!os) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

Point2 GridSpec::cell_center(std::size_t col, std::size_t row) const {
    const Rational half(1, 2);
    return {origin.x + cell_size * (Rational(static_cast<long>(col)) + half),
            origin.y + cell_size * (Rational(static_cast<long>(row)) + half)};
}

std::size_t RasterSet::occupied() const {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

double shape_area(const ShapeSpec& s) {
    return std::visit(
        [](const auto& shape) -> double {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, TriangleShape>) {
                return abs(orient(shape.a, shape.b, shape.c)).to_double() / 2.0;
            } else if constexpr (std::is_same_v<T, RectangleShape>) {
                return ((shape.upper.x - shape.lower.x) * (shape.upper.y - shape.lower.y)).to_double();
            } else {
                return std::numbers::pi * (shape.semi_x * shape.semi_y).to_double();
            }
        },
        s);
}

RasterSet rasterize(const ShapeSpec& s, const GridSpec& grid) {
    if (grid.dimension != 2) throw std::invalid_argument("planar shape on a line grid");
    const bool degenerate = std::visit(
        [](const auto& shape) {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, TriangleShape>) return orient(shape.a, shape.b, shape.c).is_zero();
            else if constexpr (std::is_same_v<T, RectangleShape>)
                return !(shape.lower.x < shape.upper.x && shape.lower.y < shape.upper.y);
            else return shape.semi_x.sign() <= 0 || shape.semi_y.sign() <= 0;
        },
        s);
    if (degenerate) throw std::invalid_argument("shape with zero area");

    const Bounds b = bounds_of(s);
    if (b.min_x < grid.origin.x || b.min_y < grid.origin.y || grid.max_x() < b.max_x || grid.max_y() < b.max_y)
        throw std::invalid_argument("shape exceeds the grid");

    RasterSet r(grid);
    for (std::size_t row = 0; row < grid.height; ++row)
        for (std::size_t col = 0; col < grid.width; ++col)
            if (inside(s, grid.cell_center(col, row))) r.set(row * grid.width + col);
    return r;
}

RasterSet rasterize(const IntervalSet& s, const GridSpec& grid) {
    if (grid.dimension != 1 || grid.height != 1) throw std::invalid_argument("interval set needs a line grid");
    if (!s.empty() && (s.lower() < grid.origin.x || grid.max_x() < s.upper()))
        throw std::invalid_argument("interval set exceeds the grid");
    RasterSet r(grid);
    const Rational half(1, 2);
    const long last = static_cast<long>(grid.width) - 1;
    for (const auto& iv : s.intervals()) {
        // centers o + (i + 1/2) h inside [lo, hi]
        const Rational from = (iv.lo - grid.origin.x) / grid.cell_size - half;
        const Rational to = (iv.hi - grid.origin.x) / grid.cell_size - half;
        long first = -floor(-from).get_si();  // ceil
        long final = std::min(floor(to).get_si(), last);
        for (long i = std::max(first, 0L); i <= final; ++i) r.set(static_cast<std::size_t>(i));
    }
    return r;
}

Point2 raster_centroid(const RasterSet& r) {
    const auto& g = r.grid();
    Rational sx, sy;
    long count = 0;
    for (std::size_t row = 0; row < g.height; ++row)
        for (std::size_t col = 0; col < g.width; ++col)
            if (r.at(col, row)) {
                const Point2 c = g.cell_center(col, row);
                sx += c.x;
                sy += c.y;
                ++count;
            }
    if (count == 0) throw std::domain_error("centroid of an empty raster");
    return {sx / Rational(count), sy / Rational(count)};
}

RasterSet raster_union(std::span<const RasterSet> sets) {
    require_common_grid(sets);
    RasterSet out(sets.front().grid());
    for (std::size_t i = 0; i < out.cell_count(); ++i)
        out.set(i, std::any_of(sets.begin(), sets.end(), [i](const RasterSet& r) { return r.at(i); }));
    return out;
}

RasterPartition raster_partition(std::span<const RasterSet> sets) {
    require_common_grid(sets);
    RasterPartition out{sets.front().grid(), {}, std::vector<int>(sets.front().cell_count(), -1)};

    std::vector<Signature> per_cell(out.labels.size());
    std::vector<Signature> distinct;
    for (std::size_t i = 0; i < per_cell.size(); ++i) {
        Signature sig(sets.size());
        for (std::size_t k = 0; k < sets.size(); ++k)
            if (sets[k].at(i)) sig.insert(k);
        if (!sig.none()) distinct.push_back(sig);
        per_cell[i] = std::move(sig);
    }
    std::sort(distinct.begin(), distinct.end(), [](const Signature& a, const Signature& b) {
        const auto ma = a.members(), mb = b.members();
        if (ma.size() != mb.size()) return ma.size() < mb.size();
        return ma < mb;
    });
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    out.signatures = distinct;

    std::map<Signature, int> index;
    for (std::size_t k = 0; k < distinct.size(); ++k) index[distinct[k]] = static_cast<int>(k);
    for (std::size_t i = 0; i < per_cell.size(); ++i)
        if (!per_cell[i].none()) out.labels[i] = index.at(per_cell[i]);
    return out;
}

RasterSet raster_partition_average(std::span<const RasterSet> sets, const WeightVector& w, const Point2& p) {
    require_common_grid(sets);
    if (sets.size() != w.size()) throw std::invalid_argument("weight/raster count mismatch");
    const RasterPartition part = raster_partition(sets);
    const GridSpec& g = part.grid;

    std::vector<std::vector<std::size_t>> groups(part.signatures.size());
    for (std::size_t i = 0; i < part.labels.size(); ++i)
        if (part.labels[i] >= 0) groups[static_cast<std::size_t>(part.labels[i])].push_back(i);

    RasterSet out(g);
    for (std::size_t k = 0; k < groups.size(); ++k) {
        Rational t;
        for (auto m : part.signatures[k].members()) t += w[m];
        auto& cells = groups[k];
        const long keep = round_half_up(t * Rational(static_cast<long>(cells.size()))).get_si();
        if (keep == 0) continue;

        std::vector<Rational> dist(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const Point2 q = g.cell_center(cells[c] % g.width, cells[c] / g.width);
            const Rational dx = q.x - p.x, dy = q.y - p.y;
            dist[c] = dx * dx + dy * dy;
        }
        std::vector<std::size_t> order(cells.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        // cells are already in row-major order, so a stable sort breaks ties by index
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });
        for (long c = 0; c < keep; ++c) out.set(cells[order[static_cast<std::size_t>(c)]]);
    }
    return out;
}

std::string encode_pgm(const RasterSet& r) {
    return encode_image(r.grid(), [&r](std::size_t i) { return r.at(i) ? 0 : 255; });
}

std::string encode_pgm(const RasterPartition& p) {
    if (p.signatures.size() > 254) throw std::invalid_argument("too many partition labels for an 8-bit image");
    const std::size_t levels = p.signatures.size();
    return encode_image(p.grid, [&](std::size_t i) -> int {
        const int label = p.labels[i];
        if (label < 0) return 255;
        return static_cast<int>(static_cast<std::size_t>(label) * 254 / levels);
    });
}

void write_pgm(const RasterSet& r, const std::filesystem::path& path) { write_bytes(encode_pgm(r), path); }
void write_pgm(const RasterPartition& p, const std::filesystem::path& path) { write_bytes(encode_pgm(p), path); }

std::vector<ShapeSpec> figure_shapes() {
    return {TriangleShape{{1, 1}, {9, 2}, {4, 8}}, RectangleShape{{3, 5}, {11, 9}}, EllipseShape{{8, 4}, 4, 2}};
}

GridSpec grid_covering(std::span<const ShapeSpec> shapes, const Rational& h) {
    if (shapes.empty()) throw std::invalid_argument("grid for an empty shape list");
    if (h.sign() <= 0) throw std::invalid_argument("cell size must be positive");
    Bounds box = bounds_of(shapes.front());
    for (const auto& s : shapes) {
        const Bounds b = bounds_of(s);
        box = {min(box.min_x, b.min_x), min(box.min_y, b.min_y), max(box.max_x, b.max_x), max(box.max_y, b.max_y)};
    }
    auto cells = [&h](const Rational& extent) {
        return static_cast<std::size_t>(std::max(1L, ceil(extent / h).get_si()));
    };
    return {{box.min_x, box.min_y}, h, cells(box.max_x - box.min_x), cells(box.max_y - box.min_y), 2};
}

GridSpec figure_grid(std::size_t cells_per_side) {
    return {{0, 0}, Rational(13) / Rational(static_cast<long>(cells_per_side)), cells_per_side, cells_per_side, 2};
}

}  // namespace setavg
