#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "hypkit/builder.hpp"
#include "hypkit/construction.hpp"
#include "hypkit/error.hpp"
#include "hypkit/script_io.hpp"

using namespace hypkit;
using disk::AnyPoint;
using disk::DiskPoint;
using disk::IdealPoint;

namespace {
constexpr double pi = std::numbers::pi;

Script crossing_lines() {
  Script s;
  s.name = "crossing";
  s.params = {{"P", ParamKind::point, {-0.5, 0.1}, {}},
              {"Q", ParamKind::point, {0.6, 0.2}, {}},
              {"R", ParamKind::point, {0.1, -0.7}, {}},
              {"T", ParamKind::ideal, {2.0}, {}}};
  s.steps = {{"line", {"PQ", "P", "Q"}}, {"line", {"RT", "R", "T"}}, {"intersect", {"X", "PQ", "RT"}, Selector::only}};
  s.outputs = {"X"};
  return s;
}

bool same_coordinates(const ConstructionState& a, const ConstructionState& b) {
  if (a.objects().size() != b.objects().size()) return false;
  for (const auto& [name, obj] : a.objects()) {
    if (!b.contains(name)) return false;
    if (const auto* p = std::get_if<AnyPoint>(&obj)) {
      const auto* q = std::get_if<AnyPoint>(&b.at(name));
      if (!q || disk::position(*p) != disk::position(*q)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("object names follow identifier rules") {
  CHECK(valid_name("A"));
  CHECK(valid_name("A'"));
  CHECK(valid_name("_x1"));
  CHECK_FALSE(valid_name(""));
  CHECK_FALSE(valid_name("1A"));
  CHECK_FALSE(valid_name("A B"));
}

TEST_CASE("selector and kind names round-trip") {
  for (Selector s : {Selector::none, Selector::only, Selector::first, Selector::second, Selector::start, Selector::end,
                     Selector::left, Selector::right}) {
    CHECK(selector_from_string(to_string(s)) == s);
  }
  for (ParamKind k : {ParamKind::point, ParamKind::ideal, ParamKind::length, ParamKind::angle}) {
    CHECK(param_kind_from_string(to_string(k)) == k);
  }
  CHECK_THROWS_AS(selector_from_string("middle"), DomainError);
}

TEST_CASE("empty script leaves the seed unchanged") {
  ConstructionState seed;
  seed.add("P", AnyPoint{DiskPoint(0.1, 0.2)});
  const RunResult r = run(Script{}, seed);
  CHECK(same_coordinates(r.state, seed));
  CHECK(r.report.results.empty());
}

TEST_CASE("two lines and their crossing replay bit for bit") {
  const RunResult r = run(crossing_lines());
  const DiskPoint x = r.state.interior_point("X");
  CHECK(disk::distance_to(x, r.state.line("PQ").geodesic).value() < 1e-12);
  CHECK(disk::distance_to(x, r.state.line("RT").geodesic).value() < 1e-12);
  const ConstructionState again = replay(r.state);
  CHECK(same_coordinates(again, r.state));
  CHECK(again.interior_point("X") == x);
}

TEST_CASE("state records objects in creation order") {
  const RunResult r = run(crossing_lines());
  REQUIRE(r.state.objects().size() == 7);
  CHECK(r.state.objects().front().first == "P");
  CHECK(r.state.objects().back().first == "X");
  CHECK(r.state.log().steps.size() == 3);
}

TEST_CASE("step errors are located") {
  Script s = crossing_lines();
  SUBCASE("name collision") {
    s.steps.push_back({"line", {"PQ", "P", "R"}});
    try {
      run(s);
      FAIL("expected a collision");
    } catch (const ConstructionError& e) {
      CHECK(e.step() == 4);
    }
  }
  SUBCASE("empty intersection") {
    s.params.push_back({"r", ParamKind::length, {0.01}, {}});
    s.steps.push_back({"circle_center_radius", {"tiny", "P", "r"}});
    s.steps.push_back({"intersect", {"Y", "tiny", "RT"}, Selector::first});
    try {
      run(s);
      FAIL("expected an empty intersection");
    } catch (const ConstructionError& e) {
      CHECK(e.step() == 5);
      CHECK(std::string(e.what()).find("do not meet") != std::string::npos);
    }
  }
  SUBCASE("two intersections need a selector") {
    s.steps.push_back({"circle_center_through", {"c", "X", "P"}});
    s.steps.push_back({"intersect", {"Y", "c", "PQ"}, Selector::only});
    try {
      run(s);
      FAIL("expected an ambiguity error");
    } catch (const ConstructionError& e) {
      CHECK(e.step() == 5);
    }
  }
  SUBCASE("unknown operation") {
    s.steps.push_back({"fold", {"Y", "P"}});
    CHECK_THROWS_AS(run(s), ConstructionError);
  }
  SUBCASE("missing parameter value") {
    s.params[0].value.clear();
    CHECK_THROWS_AS(run(s), ConstructionError);
  }
  SUBCASE("erecting at a point off the line") {
    s.steps.push_back({"perpendicular_erect", {"Y", "R", "PQ"}});
    CHECK_THROWS_AS(run(s), ConstructionError);
  }
}

TEST_CASE("seed objects override parameter values") {
  ConstructionState seed;
  seed.add("P", AnyPoint{DiskPoint(-0.4, -0.3)});
  const RunResult r = run(crossing_lines(), seed);
  CHECK(r.state.interior_point("P") == DiskPoint(-0.4, -0.3));
  const ConstructionState again = replay(r.state);
  CHECK(again.interior_point("X") == r.state.interior_point("X"));

  ConstructionState wrong;
  wrong.add("P", AnyPoint{IdealPoint(0.3)});
  CHECK_THROWS_AS(run(crossing_lines(), wrong), ConstructionError);
}

TEST_CASE("assertions are reported with residuals") {
  Script s = crossing_lines();
  s.asserts = {{"on_curve", {std::string("X"), std::string("PQ")}, 1e-9},
               {"dist", {std::string("P"), std::string("Q"), 123.0}, 1e-9},
               {"dist", {std::string("P"), std::string("nowhere"), 1.0}, 1e-9}};
  const RunResult r = run(s);
  REQUIRE(r.report.results.size() == 3);
  CHECK(r.report.results[0].passed);
  CHECK_FALSE(r.report.results[1].passed);
  CHECK(r.report.results[1].residual > 100.0);
  CHECK_FALSE(r.report.results[2].passed);
  CHECK_FALSE(r.report.results[2].note.empty());
  CHECK_FALSE(r.report.passed());
}

TEST_CASE("primitive steps produce the expected objects") {
  ScriptBuilder b("primitives");
  b.point("A", DiskPoint(-0.3, -0.1));
  b.point("B", DiskPoint(0.4, 0.2));
  b.ideal("W", IdealPoint(2.5));
  b.segment("AB", "A", "B");
  b.bisect_segment("Mid", "A", "B");
  const auto& s = b.state();
  CHECK(std::abs(disk::dist(s.interior_point("A"), s.interior_point("Mid")).value() -
                 disk::dist(s.interior_point("B"), s.interior_point("Mid")).value()) < 1e-12);

  b.bisect_angle("bis", "A", "B", "W");
  const double half = disk::measure_angle(s.interior_point("A"), s.point("B"), s.point("W")).radians() / 2.0;
  b.mark("bis_end", "bis", Selector::end);
  CHECK(std::abs(disk::measure_angle(s.interior_point("A"), s.point("B"), s.point("bis_end")).radians() - half) <
        1e-12);

  b.line("AW", "A", "W");
  const auto d = b.drop("perp", "F", "B", "AW");
  CHECK(std::abs(disk::measure_angle(s.interior_point(d.foot), s.point("A"), s.point("B")).radians() - pi / 2.0) <
        1e-10);

  b.length("len", 0.7);
  b.circle_length("c", "A", "len");
  b.intersect_near("Y", "c", "AW", "W");
  CHECK(std::abs(disk::dist(s.interior_point("A"), s.interior_point("Y")).value() - 0.7) < 1e-12);

  b.reflect("B'", "B", "AW");
  CHECK(std::abs(disk::dist(s.interior_point("A"), s.interior_point("B'")).value() -
                 disk::dist(s.interior_point("A"), s.interior_point("B")).value()) < 1e-10);
  CHECK(std::abs(disk::dist(s.interior_point(d.foot), s.interior_point("B'")).value() -
                 disk::dist(s.interior_point(d.foot), s.interior_point("B")).value()) < 1e-10);

  const RunResult r = run(b.script());
  CHECK(same_coordinates(r.state, s));
}

TEST_CASE("transfer_angle sides are counter-clockwise for left") {
  ScriptBuilder b("transfer");
  b.point("O", DiskPoint(0.2, -0.1));
  b.ideal("T", IdealPoint(0.0));
  b.angle("phi", 0.6, "test");
  b.transfer_param("L", "phi", "O", "T", Selector::left);
  b.transfer_param("R", "phi", "O", "T", Selector::right);
  const auto& s = b.state();
  const auto o = s.interior_point("O");
  const auto base = disk::tangent_direction(o, s.point("T"));
  const auto dl = disk::tangent_direction(o, s.line("L").to);
  const auto dr = disk::tangent_direction(o, s.line("R").to);
  CHECK(std::abs(std::arg(dl / base) - 0.6) < 1e-12);
  CHECK(std::abs(std::arg(dr / base) + 0.6) < 1e-12);
}

TEST_CASE("laid angles match their rational multiples of pi") {
  for (const Rational& q : {Rational(1, 2), Rational(1, 4), Rational(3, 8), Rational(5, 16), Rational(3, 4),
                            Rational(1, 3), Rational(1, 5), Rational(2, 17)}) {
    for (Selector side : {Selector::left, Selector::right}) {
      ScriptBuilder b("lay");
      b.point("V", DiskPoint(-0.2, 0.3));
      b.ideal("T", IdealPoint(-1.0));
      b.lay_angle("ray", "V", "T", q, side);
      const auto& s = b.state();
      const auto v = s.interior_point("V");
      const double got = std::arg(disk::tangent_direction(v, s.line("ray").to) / disk::tangent_direction(v, s.point("T")));
      CHECK(std::abs(got - (side == Selector::left ? 1.0 : -1.0) * q.value() * pi) < 1e-12);
    }
  }
}

TEST_CASE("dyadic angles use no angle parameters") {
  ScriptBuilder b("lay");
  b.point("V", DiskPoint(0.0, 0.0));
  b.ideal("T", IdealPoint(0.0));
  b.lay_angle("ray", "V", "T", Rational(3, 8), Selector::left);
  for (const Param& p : b.script().params) CHECK(p.kind != ParamKind::angle);

  ScriptBuilder c("lay");
  c.point("V", DiskPoint(0.0, 0.0));
  c.ideal("T", IdealPoint(0.0));
  c.lay_angle("ray", "V", "T", Rational(1, 6), Selector::left);
  REQUIRE(c.script().params.back().kind == ParamKind::angle);
  CHECK(c.script().params.back().certificate.find("12 = 2^2 * 3") != std::string::npos);
}

TEST_CASE("inconstructible angles are refused") {
  ScriptBuilder b("lay");
  b.point("V", DiskPoint(0.0, 0.0));
  b.ideal("T", IdealPoint(0.0));
  CHECK_THROWS_AS(b.lay_angle("ray", "V", "T", Rational(1, 7), Selector::left), DomainError);
  CHECK_THROWS_AS(b.lay_angle("ray", "V", "T", Rational(1, 9), Selector::left), DomainError);
  CHECK_THROWS_AS(b.lay_angle("ray", "V", "T", Rational(1), Selector::left), DomainError);
}

TEST_CASE("scripts round-trip through JSON") {
  Script s = crossing_lines();
  s.asserts = {{"on_curve", {std::string("X"), std::string("PQ")}, 1e-9}, {"dist", {std::string("P"), 0.5}, 1e-3}};
  const std::string text = dump_script(s);
  const Script back = parse_script(text);
  CHECK(dump_script(back) == text);
  CHECK(back.steps.size() == 3);
  CHECK(back.steps[2].selector == Selector::only);
  CHECK(std::get<double>(back.asserts[1].args[1]) == 0.5);
  CHECK(run(back).state.interior_point("X") == run(s).state.interior_point("X"));
}

TEST_CASE("malformed scripts name the offending field") {
  const auto message = [](const std::string& text) {
    try {
      parse_script(text);
    } catch (const ScriptFormatError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("{").find("invalid JSON") != std::string::npos);
  CHECK(message(R"({"params": []})").find("steps") != std::string::npos);
  CHECK(message(R"({"steps": [{"op": "line", "args": ["a", 3]}]})").find("steps[0].args[1]") != std::string::npos);
  CHECK(message(R"({"steps": [], "params": [{"name": "P", "kind": "point", "value": 1}]})").find("params[0].value") !=
        std::string::npos);
  CHECK(message(R"({"steps": [{"op": "intersect", "args": [], "selector": "middle"}]})").find("steps[0].selector") !=
        std::string::npos);
  CHECK(message(R"({"steps": [], "asserts": [{"predicate": "dist", "args": [], "tol": -1}]})")
            .find("asserts[0].tol") != std::string::npos);
}
