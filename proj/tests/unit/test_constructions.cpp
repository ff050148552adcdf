#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hypkit/constructions.hpp"
#include "hypkit/core_trig.hpp"
#include "hypkit/error.hpp"
#include "hypkit/script_io.hpp"
#include "sampling.hpp"

using namespace hypkit;
using disk::DiskPoint;
using disk::Geodesic;
using disk::IdealPoint;
using hypkit::testing::rel_err;
using hypkit::testing::Sampler;

namespace {
constexpr double pi = std::numbers::pi;
const Curvature k1{1.0};

void require_passed(const Construction& c) {
  for (const AssertionResult& r : c.report.results) {
    INFO(r.label << " residual " << r.residual << " " << r.note);
    CHECK(r.passed);
  }
}
}  // namespace

TEST_CASE("parallel: random lines and points") {
  Sampler rng;
  double worst_gap = 0.0, worst_angle = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Geodesic g = rng.geodesic();
    const DiskPoint d = rng.disk_point(0.8);
    if (disk::distance_to(d, g).value() < 1e-6) continue;
    const ParallelConstruction p = construct_parallel(g, d);
    require_passed(p.run);
    worst_gap = std::max(worst_gap, p.endpoint_gap);
    worst_angle = std::max(worst_angle,
                           std::abs(p.angle - angle_of_parallelism(Length(p.distance), k1).radians()));
  }
  CHECK(worst_gap < 1e-9);
  CHECK(worst_angle < 1e-9);
}

TEST_CASE("parallel: angle tends to a right angle near the line") {
  const Geodesic g(IdealPoint(-2.0), IdealPoint(1.0));
  const DiskPoint foot = disk::perpendicular(DiskPoint(0.0, 0.0), g).foot;
  double previous = 0.0;
  for (double h : {0.5, 0.1, 1e-2, 1e-3}) {
    const DiskPoint d = disk::point_along(foot, disk::tangent_direction(foot, DiskPoint(0.0, 0.0)), h);
    const ParallelConstruction p = construct_parallel(g, d);
    CHECK(p.angle > previous);
    previous = p.angle;
  }
  CHECK(std::abs(previous - pi / 2.0) < 2e-3);
}

TEST_CASE("parallel: point on the line is rejected") {
  const Geodesic g(IdealPoint(-2.0), IdealPoint(1.0));
  CHECK_THROWS_AS(construct_parallel(g, disk::perpendicular(DiskPoint(0.1, 0.1), g).foot), DomainError);
}

TEST_CASE("parallelism segment: closed form and altitude concurrency") {
  const SegmentConstruction s = construct_parallelism_segment(Angle(pi / 4.0));
  require_passed(s.run);
  CHECK(std::abs(s.length - std::log(1.0 + std::sqrt(2.0))) < 1e-9);

  for (double phi : {0.1, 0.3, 0.7, 1.0, 1.3, 1.5}) {
    const SegmentConstruction t = construct_parallelism_segment(Angle(phi));
    require_passed(t.run);
    CHECK(std::abs(angle_of_parallelism(Length(t.length), k1).radians() - phi) < 1e-9);
  }
}

TEST_CASE("parallelism segment: shrinks as the angle opens") {
  const double near_right = construct_parallelism_segment(Angle(pi / 2.0 - 1e-3)).length;
  CHECK(near_right < 2e-3);
  CHECK_THROWS_AS(construct_parallelism_segment(Angle(pi / 2.0)), DomainError);
  CHECK_THROWS_AS(construct_parallelism_segment(Angle(2.0)), DomainError);
}

TEST_CASE("ratio distance is ln 2") {
  const RatioConstruction r = construct_ratio_distance();
  require_passed(r.run);
  CHECK(std::abs(r.distance - std::log(2.0)) < 1e-9);
  CHECK(std::abs(r.ratio - 2.0) < 1e-9);
  const ConstructionState again = replay(r.run.state);
  CHECK(again.interior_point("J") == r.run.state.interior_point("J"));
}

TEST_CASE("ratio distance numeric variant") {
  CHECK(std::abs(ratio_distance_numeric(Angle(std::asin(1.0 / std::exp(1.0)))) - 1.0) < 1e-9);
  CHECK(std::abs(ratio_distance_numeric(Angle(pi / 6.0)) - std::log(2.0)) < 1e-9);
  Sampler rng;
  for (int i = 0; i < 50; ++i) {
    const double t = rng.uniform(0.05, 1.5);
    CHECK(std::abs(ratio_distance_numeric(Angle(t)) + std::log(std::sin(t))) < 1e-9);
  }
}

TEST_CASE("quadrature angle") {
  const QuadratureAngleConstruction q = construct_quadrature_angle(Length(2.0 * std::asinh(0.5)));
  require_passed(q.run);
  CHECK(std::abs(q.z - pi / 4.0) < 1e-9);

  Sampler rng;
  for (int i = 0; i < 20; ++i) {
    const double s = rng.uniform(0.05, 3.0);
    const QuadratureAngleConstruction r = construct_quadrature_angle(Length(s));
    require_passed(r.run);
    const double y = std::asinh(2.0 * std::sinh(s / 2.0));
    CHECK(std::abs(std::pow(std::tan(r.z), 2) - std::pow(std::sinh(y), 2)) < 1e-9 * std::max(1.0, std::sinh(y) * std::sinh(y)));
  }
  CHECK(construct_quadrature_angle(Length(1e-3)).z < 1e-3);
}

TEST_CASE("right triangle for the square") {
  const TriangleConstruction t = construct_right_triangle_for_polygon(Rational(1, 4), Rational(1, 8));
  require_passed(t.run);
  CHECK(std::abs(std::cosh(t.measured.a.value()) - std::cos(pi / 4.0) / std::sin(pi / 8.0)) < 1e-9);
  CHECK(std::abs(t.measured.alpha.radians() - pi / 4.0) < 1e-9);
  CHECK(std::abs(t.measured.beta.radians() - pi / 8.0) < 1e-9);
  CHECK(right_triangle_residuals(t.measured).max() < 1e-9);

  const ConstructionState& s = t.run.state;
  const double b_prime = disk::dist(s.interior_point("A1"), s.interior_point("L")).value();
  const double c_prime = disk::dist(s.interior_point("A1"), s.interior_point("Lc")).value();
  CHECK(std::abs(std::cosh(b_prime) - 1.0 / std::sin(pi / 4.0)) < 1e-9);
  CHECK(std::abs(std::cosh(c_prime) - 1.0 / std::sin(pi / 8.0)) < 1e-9);

  CHECK_THROWS_AS(construct_right_triangle_for_polygon(Rational(1, 4), Rational(1, 4)), DomainError);
  CHECK_THROWS_AS(construct_right_triangle_for_polygon(Rational(1, 7), Rational(1, 8)), DomainError);
}

TEST_CASE("regular polygons") {
  struct Case {
    int n;
    Rational v;
    double area;
  };
  for (const Case& c : {Case{4, Rational(1, 4), pi}, Case{6, Rational(1, 6), 3.0 * pi}, Case{5, Rational(1, 5), 2.0 * pi},
                        Case{3, Rational(1, 6), pi / 2.0}, Case{8, Rational(1, 2), 2.0 * pi}}) {
    const PolygonConstruction p = construct_regular_polygon(c.n, c.v);
    require_passed(p.run);
    CHECK(p.vertices.size() == static_cast<std::size_t>(c.n));
    CHECK(std::abs(p.area - c.area) < 1e-9);
    CHECK(p.closure_gap < 1e-9);
  }
  CHECK_THROWS_AS(construct_regular_polygon(7, Rational(1, 7)), DomainError);
  CHECK_THROWS_AS(construct_regular_polygon(4, Rational(1, 2)), DomainError);
  CHECK_THROWS_AS(construct_regular_polygon(2, Rational(0)), DomainError);
}

TEST_CASE("full quadrature") {
  const QuadratureConstruction sq = construct_quadrature(Rational(1));
  require_passed(sq.run);
  CHECK(sq.plan.n == 4);
  CHECK(std::abs(sq.z - pi / 4.0) < 1e-9);
  CHECK(rel_err(sq.polygon_area, sq.circle_area) < 1e-8);
  CHECK(rel_err(sq.polygon_area, pi) < 1e-9);

  const QuadratureConstruction pent = construct_quadrature(Rational(2));
  require_passed(pent.run);
  CHECK(pent.plan.n == 5);
  CHECK(rel_err(pent.polygon_area, 2.0 * pi) < 1e-9);

  CHECK_THROWS_AS(construct_quadrature(Rational(1, 7)), DomainError);
}

TEST_CASE("golden scripts pass and replay deterministically") {
  for (const auto& [file, script] : golden_scripts()) {
    INFO(file);
    const Script parsed = parse_script(dump_script(script));
    const Construction first = execute(parsed);
    const Construction second = execute(parsed);
    require_passed(first);
    CHECK_FALSE(first.report.results.empty());
    REQUIRE(first.state.objects().size() == second.state.objects().size());
    for (std::size_t i = 0; i < first.state.objects().size(); ++i) {
      const auto& [name, obj] = first.state.objects()[i];
      if (const auto* p = std::get_if<disk::AnyPoint>(&obj)) {
        CHECK(disk::position(*p) == disk::position(second.state.point(name)));
      }
    }
  }
}

TEST_CASE("scripts carry no coordinates after their parameters") {
  for (const auto& [file, script] : golden_scripts()) {
    INFO(file);
    for (const Step& s : script.steps) {
      for (const std::string& a : s.args) CHECK(valid_name(a));
    }
  }
}
