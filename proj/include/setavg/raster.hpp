#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "setavg/interval_set.hpp"
#include "setavg/multivariate.hpp"
#include "setavg/partition.hpp"
#include "setavg/rational.hpp"

namespace setavg {

// Axis-aligned grid of square cells. Cell (col, row) covers
// [origin.x + col h, origin.x + (col+1) h] x [origin.y + row h, ...].
// A line grid (dimension 1) has a single row and measures cells by h.
struct GridSpec {
    Point2 origin;
    Rational cell_size;
    std::size_t width = 0;
    std::size_t height = 1;
    unsigned dimension = 2;

    Point2 cell_center(std::size_t col, std::size_t row) const;
    Rational cell_measure() const { return dimension == 1 ? cell_size : cell_size * cell_size; }
    Rational max_x() const { return origin.x + cell_size * Rational(static_cast<long>(width)); }
    Rational max_y() const { return origin.y + cell_size * Rational(static_cast<long>(height)); }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

// Occupancy grid standing in for a planar (or linear) set.
class RasterSet {
public:
    explicit RasterSet(GridSpec grid) : grid_(std::move(grid)), cells_(grid_.width * grid_.height, 0) {}

    const GridSpec& grid() const { return grid_; }
    bool at(std::size_t index) const { return cells_[index] != 0; }
    bool at(std::size_t col, std::size_t row) const { return at(row * grid_.width + col); }
    void set(std::size_t index, bool value = true) { cells_[index] = value ? 1 : 0; }
    std::size_t cell_count() const { return cells_.size(); }
    std::size_t occupied() const;
    Rational measure() const { return grid_.cell_measure() * Rational(static_cast<long>(occupied())); }

    friend bool operator==(const RasterSet&, const RasterSet&) = default;

private:
    GridSpec grid_;
    std::vector<std::uint8_t> cells_;
};

struct TriangleShape {
    Point2 a, b, c;
};
struct RectangleShape {
    Point2 lower, upper;
};
struct EllipseShape {
    Point2 center;
    Rational semi_x, semi_y;
};
using ShapeSpec = std::variant<TriangleShape, RectangleShape, EllipseShape>;

// Exact area of the continuous shape; the ellipse area is returned as a
// double since it involves pi.
double shape_area(const ShapeSpec& s);

// Cell occupied iff its center lies in the closed shape. Throws
// std::invalid_argument for zero-area shapes or shapes leaving the grid.
RasterSet rasterize(const ShapeSpec& s, const GridSpec& grid);
// Line rasterization of an interval set on a one-row grid.
RasterSet rasterize(const IntervalSet& s, const GridSpec& grid);

// Mean of the occupied cell centers; throws on an empty raster.
Point2 raster_centroid(const RasterSet& r);
RasterSet raster_union(std::span<const RasterSet> sets);

// Per-cell partition of the union. labels[i] indexes `signatures`, or -1 for
// cells outside the union. Signatures are ordered by size, then members.
struct RasterPartition {
    GridSpec grid;
    std::vector<Signature> signatures;
    std::vector<int> labels;
};
RasterPartition raster_partition(std::span<const RasterSet> sets);

// Partition average on a common grid: within each signature group the cells
// are sorted by squared distance to p (ties by row-major index) and the first
// round_half_up(t * count) are kept.
RasterSet raster_partition_average(std::span<const RasterSet> sets, const WeightVector& w, const Point2& p);

// Binary PGM (P5, maxval 255), top image row = highest grid row.
std::string encode_pgm(const RasterSet& r);
std::string encode_pgm(const RasterPartition& p);
void write_pgm(const RasterSet& r, const std::filesystem::path& path);
void write_pgm(const RasterPartition& p, const std::filesystem::path& path);

// Triangle (1,1),(9,2),(4,8); rectangle [3,11]x[5,9]; ellipse centered at
// (8,4) with semi-axes 4 and 2. Every signature of the three is nonempty.
std::vector<ShapeSpec> figure_shapes();
// Smallest grid with cell size h anchored at the lower-left corner of the
// shapes' common bounding box and covering all of them.
GridSpec grid_covering(std::span<const ShapeSpec> shapes, const Rational& h);

// Square grid over [0,13]^2 with the given number of cells per side.
GridSpec figure_grid(std::size_t cells_per_side);

}  // namespace setavg
