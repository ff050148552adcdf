#include <doctest.h>

#include <cmath>
#include <numbers>
#include <regex>
#include <set>
#include <string>

#include "hypkit/constructions.hpp"
#include "hypkit/core_trig.hpp"
#include "hypkit/svg.hpp"
#include "hypkit/verify.hpp"

using namespace hypkit;
using disk::DiskPoint;

namespace {
constexpr double pi = std::numbers::pi;

std::set<std::string> element_ids(const std::string& svg) {
  std::set<std::string> ids;
  const std::regex id_re("id=\"([^\"]+)\"");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), id_re); it != std::sregex_iterator(); ++it) {
    ids.insert((*it)[1]);
  }
  return ids;
}
}  // namespace

TEST_CASE("svg of an empty state has only the boundary") {
  const std::string svg = render_svg(ConstructionState{});
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("r=\"500.000000\"") != std::string::npos);
  CHECK(element_ids(svg).empty());
}

TEST_CASE("svg names every drawable object and uses the fixed palette") {
  const Construction c = execute(golden_scripts().front().second);
  const std::string svg = render_svg(c.state);
  const std::set<std::string> ids = element_ids(svg);
  for (const auto& [name, obj] : c.state.objects()) {
    if (std::holds_alternative<Scalar>(obj)) {
      CHECK(ids.count(name) == 0);
    } else {
      CHECK(ids.count(name) == 1);
    }
  }
  CHECK(svg.find("stroke=\"blue\"") != std::string::npos);
  CHECK(svg.find("stroke=\"red\"") != std::string::npos);
  const std::regex allowed("<(/?)(\\?xml|svg|circle|path|line|text)[ >]");
  const std::regex any_tag("<(/?)([a-zA-Z?][a-zA-Z]*)");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), any_tag); it != std::sregex_iterator(); ++it) {
    const std::string tag = (*it)[2];
    CHECK((tag == "?xml" || tag == "svg" || tag == "circle" || tag == "path" || tag == "line" || tag == "text"));
  }
}

TEST_CASE("svg curves use their colours") {
  ConstructionState s;
  const disk::Geodesic g(disk::IdealPoint(0.3), disk::IdealPoint(2.0));
  s.add("h", disk::CurveObject{disk::Horocycle{disk::IdealPoint(1.0), DiskPoint(0.1, 0.0)}});
  s.add("q", disk::CurveObject{disk::Equidistant{g, 0.4}});
  s.add("c", disk::CurveObject{disk::HyperbolicCircle{DiskPoint(0.2, 0.1), 0.5}});
  const std::string svg = render_svg(s);
  CHECK(svg.find("id=\"h\" cx") != std::string::npos);
  CHECK(svg.find("stroke=\"green\"") != std::string::npos);
  CHECK(svg.find("stroke=\"orange\"") != std::string::npos);
  CHECK(svg.find("stroke=\"red\"") != std::string::npos);
}

TEST_CASE("svg rendering is deterministic") {
  const Construction a = execute(golden_scripts()[2].second);
  const Construction b = execute(golden_scripts()[2].second);
  CHECK(render_svg(a.state) == render_svg(b.state));
}

TEST_CASE("integrated triangle area matches the defect") {
  const DiskPoint a(0.1, 0.2), b(-0.6, -0.3), c(0.5, -0.4);
  const std::array<Angle, 3> angles{disk::measure_angle(a, b, c), disk::measure_angle(b, c, a),
                                    disk::measure_angle(c, a, b)};
  const double defect = polygon_area_from_angles(angles, Curvature(1.0)).value();
  CHECK(std::abs(verify::integrate_triangle_area(a, b, c) - defect) < 1e-10 * defect);
}

TEST_CASE("limit residuals fall off quadratically") {
  const std::vector<double> ratios{1e2, 1e3, 1e4};
  const auto rows = verify::limit_table(ratios);
  std::vector<double> circ;
  for (const auto& r : rows) circ.push_back(r.circumference);
  CHECK(std::abs(verify::fitted_order(ratios, circ) - 2.0) < 0.01);
  CHECK(std::abs(rows[0].circumference - 1.0 / 6.0 * 1e-4) < 1e-8);
}

TEST_CASE("verification suites pass and are deterministic") {
  const auto first = verify::run_suite("all", {});
  const auto second = verify::run_suite("all", {});
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    INFO(first[i].property);
    CHECK(first[i].passed);
    CHECK(first[i].max_residual == second[i].max_residual);
  }
  CHECK_THROWS_AS(verify::run_suite("bogus", {}), DomainError);
}
