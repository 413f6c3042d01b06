#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "setavg/catalog.hpp"
#include "setavg/experiments.hpp"

using namespace setavg;
using testgen::R;
using testgen::S;

TEST_CASE("built-in catalog") {
    const auto names = builtin_svf_names();
    for (const auto* want : {"grow", "slide", "split", "holder", "constant"})
        CHECK(std::find(names.begin(), names.end(), want) != names.end());
    CHECK(builtin_svf("grow")(R(1, 2)) == S({{0, R(3, 2)}}));
    CHECK(builtin_svf("slide")(R(1, 4)) == S({{R(1, 4), R(5, 4)}}));
    CHECK(builtin_svf("split")(R(1, 2)) == S({{0, 1}, {2, R(5, 2)}}));
    CHECK(builtin_svf("split")(0) == S({{0, 1}}));
    CHECK(builtin_svf("holder")(R(1, 4)) == S({{0, R(3, 2)}}));
    CHECK(std::abs(measure(builtin_svf("holder")(R(1, 2))).to_double() - (1 + std::sqrt(0.5))) < 1e-15);
    CHECK(builtin_svf("slide").holder->constant == R(2));
    CHECK(builtin_svf("holder").holder->exponent == R(1, 2));
    CHECK(builtin_planar_svf("plane")({R(1, 2), R(1, 4)}) == S({{0, R(7, 4)}}));
    CHECK_THROWS(builtin_planar_svf("nope"));
}

TEST_CASE("convergence rows") {
    const auto grow = builtin_svf("grow");
    const auto rows = run_convergence(grow, OperatorKind::Bernstein, std::vector<unsigned>{4, 1}, uniform_grid(3));
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].n == 1);
    CHECK(rows[0].x == R(0));
    CHECK(rows[1].x == R(1, 2));
    CHECK(rows[3].n == 4);
    CHECK(rows[1].error == R(0));
    CHECK(rows[1].measure == R(3, 2));
    for (const auto& r : rows) {
        if (r.x.is_zero() || r.x == R(1)) CHECK(r.error == R(0));
        CHECK(r.bound == doctest::Approx(holder_rate_bound(*grow.holder, r.n, r.x)));
    }

    const auto holder = builtin_svf("holder");
    const auto h64 = run_convergence(holder, OperatorKind::Bernstein, std::vector<unsigned>{64}, uniform_grid(33));
    double worst = 0, cap = 0;
    for (const auto& r : h64) {
        worst = std::max(worst, r.error.to_double());
        const double x = r.x.to_double();
        cap = std::max(cap, std::pow(x * (1 - x) / 64, 0.25));
    }
    CHECK(worst <= std::sqrt(1.0 / 64) + cap + 1e-9);

    const auto dc = run_convergence(builtin_svf("slide"), OperatorKind::DeCasteljau, std::vector<unsigned>{3},
                                    uniform_grid(5));
    CHECK(dc.front().op == "decasteljau");
    for (const auto& r : dc) CHECK(r.error.to_double() <= r.bound + 1e-9);

    const SampledSVF bare{"bare", [](const Rational&) { return S({{0, 1}}); }, std::nullopt};
    CHECK_THROWS_AS(run_convergence(bare, OperatorKind::Bernstein, std::vector<unsigned>{1}, uniform_grid(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(uniform_grid(1), std::invalid_argument);
    CHECK_THROWS_AS(parse_operator_kind("spline"), std::invalid_argument);
    CHECK(parse_operator_kind("decasteljau") == OperatorKind::DeCasteljau);
}

TEST_CASE("CSV rendering") {
    const auto rows = run_convergence(builtin_svf("grow"), OperatorKind::Bernstein, std::vector<unsigned>{2},
                                      std::vector<Rational>{R(1, 3)});
    const auto csv = convergence_csv(rows);
    std::istringstream is(csv);
    std::string header, line;
    std::getline(is, header);
    std::getline(is, line);
    CHECK(header == "operator,n,x,error,bound,measure");
    // B_2 measure = 1 + 1/3; error is the exact distance
    CHECK(line.rfind("bernstein,2,0.333333333333,", 0) == 0);
    CHECK(line.substr(line.rfind(',') + 1) == "1.33333333333");

    const auto exact = convergence_csv(rows, true);
    CHECK(exact.find(",1/3,") != std::string::npos);
    CHECK(exact.find(",4/3\n") != std::string::npos);
    CHECK(convergence_csv(rows) == csv);

    const std::vector<Point2> q{{R(1, 2), R(1, 4)}};
    const auto mv = multivariate_csv(run_multivariate(builtin_planar_svf("plane"),
                                                      triangulate({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), 1, q),
                                     true);
    CHECK(mv.rfind("level,Delta,query_x,query_y,error,bound\n", 0) == 0);
    CHECK(mv.find("\n1,") != std::string::npos);
}

TEST_CASE("monotone reports") {
    const auto grow = builtin_svf("grow");
    const auto ok = run_monotone_check(grow, WeightScheme::bernstein(), 4, uniform_grid(9));
    CHECK(ok.chain_holds);
    CHECK_FALSE(ok.violation);
    CHECK(ok.set_speeds.size() == 8);

    const auto constant = run_monotone_check(builtin_svf("constant"), WeightScheme::bernstein(), 4, uniform_grid(9));
    CHECK(constant.chain_holds);
    CHECK(constant.speed_identity);

    const auto bad = run_monotone_check(grow, WeightScheme::reversed_bernstein(), 4, uniform_grid(9));
    CHECK_FALSE(bad.chain_holds);
    REQUIRE(bad.witness);
    CHECK(bad.witness->size() == 5);
    CHECK(bad.set_speeds.empty());
}
