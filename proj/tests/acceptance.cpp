// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#define DOCTEST_CONFIG_DISABLE
#include "support.hpp"

#include "setavg/catalog.hpp"
#include "setavg/experiments.hpp"
#include "setavg/raster.hpp"

using namespace setavg;
using testgen::R;
using testgen::S;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.pass) ++failures;
    std::printf("%s %2d %s (%.2fs)%s%s\n", out.pass ? "PASS" : "FAIL", id, title, secs, out.detail.empty() ? "" : ": ",
                out.detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

double elapsed_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

struct Triple {
    std::vector<IntervalSet> sets;
    WeightVector w;
};

std::vector<Triple> triples() {
    std::mt19937_64 rng(1001);
    std::vector<Triple> out;
    for (int i = 0; i < 200; ++i) {
        auto sets = testgen::random_sets(rng, 3);
        auto w = testgen::random_weights(rng, 3, 0.15, 30);
        out.push_back({std::move(sets), std::move(w)});
    }
    return out;
}

Rational mean_of_measures(const SampledSVF& f, const WeightScheme& scheme, unsigned n, const Rational& x) {
    auto mu = [&f](const Rational& t) { return measure(f(t)); };
    return positive_operator(mu, scheme, n, x, RealSpace{});
}

std::vector<Rational> grid(unsigned points) { return uniform_grid(points); }

std::string slurp(const std::filesystem::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace

int main() {
    const auto fixtures = triples();

    report(1, "measure linearity of the partition average", [&] {
        const auto t0 = std::chrono::steady_clock::now();
        for (const auto& t : fixtures)
            if (measure(partition_average(t.sets, t.w)) != testgen::weighted_measure(t.sets, t.w))
                return Outcome{false, "mismatch on " + format_set_literal(t.sets[0])};
        const double secs = elapsed_since(t0);
        return Outcome{secs < 5.0, fmt("200 triples exact, %.2fs < 5s", secs)};
    });

    report(2, "distance to the partition average", [&] {
        int checks = 0;
        for (const auto& t : fixtures) {
            const auto avg = partition_average(t.sets, t.w);
            for (std::size_t j = 0; j < 3; ++j) {
                Rational rhs;
                for (std::size_t i = 0; i < 3; ++i) rhs += t.w[i] * sym_diff_distance(t.sets[j], t.sets[i]);
                if (sym_diff_distance(t.sets[j], avg) != rhs) return Outcome{false, "identity broken"};
                ++checks;
            }
        }
        return Outcome{true, std::to_string(checks) + " exact equalities"};
    });

    report(3, "metric property of two-set averages", [] {
        std::mt19937_64 rng(1003);
        std::uniform_int_distribution<long> num(0, 24);
        for (int i = 0; i < 100; ++i) {
            const auto sets = testgen::random_sets(rng, 2);
            const Rational a(num(rng), 24), b(num(rng), 24);
            const auto avg_a = partition_average(sets, WeightVector({1 - a, a}));
            const auto avg_b = partition_average(sets, WeightVector({1 - b, b}));
            if (sym_diff_distance(avg_a, avg_b) != abs(a - b) * sym_diff_distance(sets[0], sets[1]))
                return Outcome{false, "pair " + std::to_string(i)};
        }
        return Outcome{true, "100 pairs exact"};
    });

    report(4, "expectation inequality and integral form", [] {
        std::mt19937_64 rng(1004);
        int strict = 0;
        for (int i = 0; i < 100; ++i) {
            const auto sets = testgen::random_sets(rng, 2 + i % 3);
            const auto wa = testgen::random_weights(rng, sets.size(), 0.15);
            const auto wb = testgen::random_weights(rng, sets.size(), 0.15);
            const Rational lhs = sym_diff_distance(partition_average(sets, wa), partition_average(sets, wb));
            Rational rhs;
            for (std::size_t p = 0; p < sets.size(); ++p)
                for (std::size_t q = 0; q < sets.size(); ++q) rhs += wa[p] * wb[q] * sym_diff_distance(sets[p], sets[q]);
            if (!(lhs <= rhs)) return Outcome{false, "inequality fails at " + std::to_string(i)};
            if (average_distance_integral(sets, wa, wb) != lhs) return Outcome{false, "integral form differs"};
            strict += lhs < rhs ? 1 : 0;
        }
        return Outcome{true, "100 cases exact, " + std::to_string(strict) + " strict"};
    });

    report(5, "measure transfer for Bernstein and piecewise-linear schemes", [] {
        int checks = 0;
        for (const auto& scheme : {WeightScheme::bernstein(), WeightScheme::piecewise_linear()})
            for (const auto& name : {"grow", "slide", "split", "holder"}) {
                const auto f = builtin_svf(name);
                for (unsigned n = 1; n <= 16; ++n)
                    for (long k = 0; k < 20; ++k) {
                        const Rational x(k, 19);
                        if (measure(positive_operator(f, scheme, n, x, IntervalSetSpace{})) !=
                            mean_of_measures(f, scheme, n, x))
                            return Outcome{false, scheme.name + "/" + name};
                        ++checks;
                    }
            }
        return Outcome{true, std::to_string(checks) + " exact equalities"};
    });

    report(6, "de Casteljau distance identity", [] {
        std::mt19937_64 rng(1006);
        int checks = 0;
        for (unsigned n = 1; n <= 8; ++n) {
            // Built-ins plus a random sample table on the nodes i/n.
            const auto values = testgen::random_sets(rng, n + 1, testgen::SetGen{4, 6, 2});
            const SampledSVF table{"table",
                                   [values, n](const Rational& x) {
                                       return values.at((x * Rational(static_cast<long>(n))).numerator().get_ui());
                                   },
                                   std::nullopt};
            for (const auto& f : {builtin_svf("slide"), builtin_svf("split"), builtin_svf("holder"), table}) {
                for (long k = 0; k <= 8; ++k) {
                    const Rational x(k, 8);
                    const auto dc = decasteljau_svf(f, n, x);
                    const auto b = bernstein_weights(n, x);
                    for (unsigned i = 0; i <= n; ++i) {
                        const auto fi = f(Rational(i, n));
                        Rational rhs;
                        for (unsigned j = 0; j <= n; ++j) rhs += b[j] * sym_diff_distance(fi, f(Rational(j, n)));
                        if (sym_diff_distance(dc, fi) != rhs)
                            return Outcome{false, f.name + " n=" + std::to_string(n)};
                        ++checks;
                    }
                }
            }
        }
        return Outcome{true, std::to_string(checks) + " exact equalities"};
    });

    report(7, "Hoelder rate of the set-valued Bernstein operator", [] {
        const auto t0 = std::chrono::steady_clock::now();
        const std::vector<unsigned> degrees{1, 2, 4, 8, 16, 32, 64, 128};
        double worst_ratio = 0;
        for (const auto* name : {"slide", "holder"}) {
            for (const auto& r : run_convergence(builtin_svf(name), OperatorKind::Bernstein, degrees, grid(33))) {
                if (r.error.to_double() > r.bound + 1e-9)
                    return Outcome{false, std::string(name) + " n=" + std::to_string(r.n) + " x=" + r.x.to_string()};
                if (r.bound > 0) worst_ratio = std::max(worst_ratio, r.error.to_double() / r.bound);
            }
        }
        const double secs = elapsed_since(t0);
        return Outcome{secs < 30.0, fmt("max error/bound %.3f, %.2fs < 30s", worst_ratio, secs)};
    });

    report(8, "Kac bound for the real Bernstein polynomial of |t-1/2|", [] {
        auto f = [](const Rational& t) { return abs(t - R(1, 2)); };
        double worst = -1;
        for (unsigned n = 1; n <= 128; ++n)
            for (const auto& x : grid(33)) {
                const double err = abs(f(x) - bernstein_real(f, n, x)).to_double();
                const double xd = x.to_double();
                const double bound = std::sqrt(xd * (1 - xd) / n);
                if (err > bound + 1e-12) return Outcome{false, "n=" + std::to_string(n) + " x=" + x.to_string()};
                worst = std::max(worst, err - bound);
            }
        return Outcome{true, fmt("max(error - bound) = %.3g", worst)};
    });

    report(9, "convergence to zero for every built-in", [] {
        std::string detail;
        bool pass = true;
        for (const auto& name : builtin_svf_names()) {
            double e8 = 0, e128 = 0;
            for (const auto& r : run_convergence(builtin_svf(name), OperatorKind::Bernstein,
                                                 std::vector<unsigned>{8, 128}, grid(33)))
                (r.n == 8 ? e8 : e128) = std::max(r.n == 8 ? e8 : e128, r.error.to_double());
            const bool ok = e128 <= e8 / 3;
            pass = pass && ok;
            detail += name + fmt("=%.3f ", e8 > 0 ? e128 / e8 : 0.0);
        }
        return Outcome{pass, "ratio n=128/n=8: " + detail};
    });

    report(10, "monotonicity preservation and necessity witness", [] {
        const auto grow = builtin_svf("grow");
        for (unsigned n = 1; n <= 16; ++n) {
            const auto vals = grid(33);
            IntervalSet prev;
            for (std::size_t k = 0; k < vals.size(); ++k) {
                const auto cur = bernstein_svf(grow, n, vals[k]);
                if (k > 0 && !contains_ae(cur, prev)) return Outcome{false, "chain breaks at n=" + std::to_string(n)};
                prev = cur;
            }
        }
        const auto a = bernstein_weights(4, R(3, 5)), b = bernstein_weights(4, R(3, 10));
        if (dominance_holds(a, b)) return Outcome{false, "pair unexpectedly dominant"};
        const auto witness = monotonicity_witness(a, b);
        if (!witness) return Outcome{false, "no witness"};
        for (std::size_t i = 0; i + 1 < witness->size(); ++i)
            if (!contains_ae((*witness)[i + 1], (*witness)[i])) return Outcome{false, "witness not nested"};
        if (contains_ae(partition_average(*witness, b), partition_average(*witness, a)))
            return Outcome{false, "witness keeps containment"};
        const auto rep = run_monotone_check(grow, WeightScheme::reversed_bernstein(), 8, grid(33));
        if (rep.chain_holds || !rep.witness) return Outcome{false, "reversed scheme not flagged"};
        return Outcome{true, "n=1..16 chains exact; witness breaks containment"};
    });

    report(11, "multivariate piecewise-linear rate", [] {
        std::vector<Point2> queries;
        for (long i = 0; i < 5; ++i)
            for (long j = 0; j < 5; ++j) queries.push_back({Rational(2 * i + 1, 10), Rational(2 * j + 1, 10)});
        const auto rows = run_multivariate(builtin_planar_svf("plane"), triangulate({{0, 0}, {1, 0}, {1, 1}, {0, 1}}),
                                           4, queries);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (rows[k].error.to_double() > rows[k].bound + 1e-9) return Outcome{false, "bound exceeded"};
            if (k >= queries.size() && rows[k].error.to_double() > rows[k - queries.size()].error.to_double() + 1e-9)
                return Outcome{false, "error grew at level " + std::to_string(rows[k].level)};
        }
        double worst = 0;
        for (const auto& r : rows)
            if (r.level == 4) worst = std::max(worst, r.error.to_double());
        return Outcome{true, fmt("levels 0..4, 25 queries, level-4 max error %.4g", worst)};
    });

    report(12, "line rasterization against exact partition averages", [] {
        std::mt19937_64 rng(1012);
        const Rational h = R(1, 4096);
        const GridSpec line{{0, 0}, h, 4 * 4096, 1, 1};
        const testgen::SetGen gen{64, 4, 2};
        double worst = 0;
        for (int i = 0; i < 50; ++i) {
            const auto sets = testgen::random_sets(rng, 2 + i % 2, gen);
            const auto w = testgen::random_weights(rng, sets.size(), 0.0, 60);
            const Rational p = centroid(set_union(sets));
            std::vector<RasterSet> r;
            for (const auto& s : sets) r.push_back(rasterize(s, line));
            const Rational gap =
                abs(raster_partition_average(r, w, {p, 0}).measure() - measure(partition_average(sets, w)));
            if (gap > 2 * h) return Outcome{false, "fixture " + std::to_string(i)};
            worst = std::max(worst, (gap / h).to_double());
        }
        return Outcome{true, fmt("50 fixtures, max gap %.2f h <= 2h", worst)};
    });

    report(13, "non-associativity and zero-weight fixtures", [] {
        const std::vector<IntervalSet> s{S({{0, R(7, 2)}}), S({{R(5, 2), 4}}), S({{2, R(5, 2)}})};
        const auto inner =
            partition_average(std::vector<IntervalSet>{s[0], s[1]}, WeightVector({R(1, 2), R(1, 2)}));
        const auto nested =
            partition_average(std::vector<IntervalSet>{inner, s[2]}, WeightVector({R(2, 3), R(1, 3)}));
        const auto flat = partition_average(s, WeightVector::uniform(3));
        const Rational d_assoc = sym_diff_distance(nested, flat);

        const auto cfg = AverageConfig::fixed(0);
        const auto two = partition_average(std::vector<IntervalSet>{S({{0, 4}}), S({{2, 3}})},
                                           WeightVector({R(1, 2), R(1, 2)}), cfg);
        const auto three = partition_average(std::vector<IntervalSet>{S({{0, 4}}), S({{2, 3}}), S({{0, 3}})},
                                             WeightVector({R(1, 2), R(1, 2), 0}), cfg);
        const Rational d_zero = sym_diff_distance(two, three);

        const auto sq = triangulate({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
        const std::vector<IntervalSet> vals{S({{R(3, 2), R(5, 2)}}), S({{R(3, 2), 2}, {R(5, 2), R(7, 2)}}),
                                            S({{1, R(7, 2)}}), S({{0, 4}})};
        const PlanarSVF table{"table",
                              [&](const Point2& p) {
                                  for (std::size_t i = 0; i < 4; ++i)
                                      if (sq.points[i] == p) return vals[i];
                                  throw std::logic_error("off-node query");
                              },
                              1, 1};
        const Point2 q{R(1, 3), R(1, 4)};
        const Rational d_strip =
            sym_diff_distance(pl_interpolant_svf(table, sq, q), pl_interpolant_zero_stripped(table, sq, q));

        const bool pass = d_assoc.sign() > 0 && d_zero.sign() > 0 && d_strip.sign() > 0;
        return Outcome{pass, "distances nested/flat " + d_assoc.to_string() + ", zero weight " + d_zero.to_string() +
                                 ", L vs L-hat " + d_strip.to_string()};
    });

    report(14, "raster figure reproduction", [] {
        const auto shapes = figure_shapes();
        double target = 0;
        for (const auto& s : shapes) target += shape_area(s) / 3;
        std::string detail;
        bool pass = true;
        const auto canvas = figure_grid(200);
        const auto tight = grid_covering(shapes, R(11, 200));  // shapes span [1,12] x [1,9]
        for (const auto& g : {canvas, tight}) {
            std::vector<RasterSet> r;
            for (const auto& s : shapes) r.push_back(rasterize(s, g));
            const auto avg = raster_partition_average(r, WeightVector::uniform(3), raster_centroid(raster_union(r)));
            const double rel = std::abs(avg.measure().to_double() - target) / target;
            pass = pass && rel <= 0.02;
            detail += fmt("h=%.4f rel.err %.4f%%; ", g.cell_size.to_double(), 100 * rel);
        }

        const auto dir = std::filesystem::temp_directory_path() / "setavg_acceptance";
        std::filesystem::create_directories(dir);
        std::string bytes[2][2];
        for (int run = 0; run < 2; ++run) {
            std::vector<RasterSet> r;
            for (const auto& s : shapes) r.push_back(rasterize(s, canvas));
            const auto avg = raster_partition_average(r, WeightVector::uniform(3), raster_centroid(raster_union(r)));
            write_pgm(raster_partition(r), dir / "partition.pgm");
            write_pgm(avg, dir / "average.pgm");
            bytes[run][0] = slurp(dir / "partition.pgm");
            bytes[run][1] = slurp(dir / "average.pgm");
        }
        std::filesystem::remove_all(dir);
        const bool stable = bytes[0][0] == bytes[1][0] && bytes[0][1] == bytes[1][1] && !bytes[0][0].empty();
        return Outcome{pass && stable, detail + (stable ? "PGM byte-stable" : "PGM differs between runs")};
    });

    std::printf("%s: %d failing criteria\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
