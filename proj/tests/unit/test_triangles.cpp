#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hypkit/core_trig.hpp"
#include "hypkit/triangles.hpp"
#include "sampling.hpp"

using namespace hypkit;
using hypkit::testing::rel_err;
using hypkit::testing::Sampler;

namespace {
constexpr double pi = std::numbers::pi;
const Curvature k1{1.0};

RightTriangleGivens legs(double a, double b) {
  RightTriangleGivens g;
  g.a = Length(a);
  g.b = Length(b);
  return g;
}
}  // namespace

TEST_CASE("right triangle from legs") {
  const RightTriangle t = solve_right_triangle(legs(1.0, 1.0), k1);
  CHECK(t.c.value() == doctest::Approx(std::acosh(std::cosh(1.0) * std::cosh(1.0))).epsilon(1e-14));
  CHECK(t.alpha.radians() == doctest::Approx(t.beta.radians()).epsilon(1e-15));
  CHECK(t.defect() > 0.0);
  CHECK(t.area() == doctest::Approx(t.defect()));
}

TEST_CASE("right triangle from leg and hypotenuse") {
  RightTriangleGivens g;
  g.a = Length(0.7);
  g.c = Length(1.6);
  const RightTriangle t = solve_right_triangle(g, Curvature(1.3));
  CHECK(std::sin(t.alpha.radians()) == doctest::Approx(std::sinh(0.7 / 1.3) / std::sinh(1.6 / 1.3)).epsilon(1e-13));

  RightTriangleGivens bad;
  bad.a = Length(1.0);
  bad.c = Length(0.5);
  CHECK_THROWS_AS(solve_right_triangle(bad, k1), DomainError);
}

TEST_CASE("angles alone fix a right triangle") {
  RightTriangleGivens g;
  g.alpha = Angle(pi / 4);
  g.beta = Angle(pi / 6);
  const RightTriangle t = solve_right_triangle(g, k1);
  CHECK(std::cosh(t.c.value()) == doctest::Approx(1.0 / (std::tan(pi / 4) * std::tan(pi / 6))).epsilon(1e-13));
  CHECK(right_triangle_residuals(t).max() < 1e-12);

  RightTriangleGivens flat;
  flat.alpha = Angle(pi / 4);
  flat.beta = Angle(pi / 4);
  CHECK_THROWS_AS(solve_right_triangle(flat, k1), DomainError);
}

TEST_CASE("every dispatch pair agrees with the leg solution") {
  Sampler s;
  for (int i = 0; i < 300; ++i) {
    const Curvature k(s.uniform(0.3, 4.0));
    const RightTriangle ref = solve_right_triangle(legs(s.uniform(0.01, 6.0) * k.value(), s.uniform(0.01, 6.0) * k.value()), k);
    const auto check = [&](const RightTriangleGivens& g) {
      const RightTriangle t = solve_right_triangle(g, k);
      CHECK(rel_err(t.a.value(), ref.a.value()) < 1e-9);
      CHECK(rel_err(t.b.value(), ref.b.value()) < 1e-9);
      CHECK(rel_err(t.c.value(), ref.c.value()) < 1e-9);
      CHECK(rel_err(t.alpha.radians(), ref.alpha.radians()) < 1e-9);
      CHECK(rel_err(t.beta.radians(), ref.beta.radians()) < 1e-9);
      CHECK(right_triangle_residuals(t).max() < 1e-10);
    };
    RightTriangleGivens g;
    g.a = ref.a, g.c = ref.c;
    check(g);
    g = {};
    g.b = ref.b, g.c = ref.c;
    check(g);
    g = {};
    g.a = ref.a, g.alpha = ref.alpha;
    check(g);
    g = {};
    g.a = ref.a, g.beta = ref.beta;
    check(g);
    g = {};
    g.b = ref.b, g.alpha = ref.alpha;
    check(g);
    g = {};
    g.c = ref.c, g.alpha = ref.alpha;
    check(g);
    g = {};
    g.alpha = ref.alpha, g.beta = ref.beta;
    if (ref.defect() > 1e-3) check(g);
    g = {};
    g.a = ref.a, g.b = ref.b, g.c = ref.c;
    check(g);
  }
}

TEST_CASE("right triangle givens errors") {
  CHECK_THROWS_AS(solve_right_triangle(RightTriangleGivens{}, k1), DomainError);
  RightTriangleGivens one;
  one.a = Length(1.0);
  CHECK_THROWS_AS(solve_right_triangle(one, k1), DomainError);
  RightTriangleGivens contradictory = legs(1.0, 1.0);
  contradictory.c = Length(1.0);
  CHECK_THROWS_AS(solve_right_triangle(contradictory, k1), DomainError);
}

TEST_CASE("right-triangle relations hold together") {
  Sampler s;
  for (int i = 0; i < 1000; ++i) {
    const Curvature k(s.uniform(0.2, 5.0));
    const RightTriangle t =
        solve_right_triangle(legs(s.uniform(1e-3, 8.0) * k.value(), s.uniform(1e-3, 8.0) * k.value()), k);
    const RightTriangleResiduals r = right_triangle_residuals(t);
    CHECK(r.sine_rule < 1e-10);
    CHECK(r.cosine_rule < 1e-10);
    CHECK(r.pythagoras < 1e-10);
    CHECK(r.sinh_variant < 1e-10);
    CHECK(r.cot_product < 1e-10);
    CHECK(t.alpha.radians() + t.beta.radians() < pi / 2);
  }
}

TEST_CASE("Euclidean limit of right triangles") {
  double prev = 1.0;
  for (double k : {1e2, 1e3, 1e4}) {
    const RightTriangle t = solve_right_triangle(legs(1.0, 1.0), Curvature(k));
    const double gap = pi / 2 - t.alpha.radians() - t.beta.radians();
    CHECK(gap > 0.0);
    CHECK(gap < prev / 50.0);
    CHECK(std::abs(t.c.value() * t.c.value() - 2.0) < 10.0 / (k * k));
    prev = gap;
  }
}

TEST_CASE("general triangle SSS, SAS, ASA, AAA agree") {
  Sampler s;
  for (int i = 0; i < 500; ++i) {
    const Curvature k(s.uniform(0.3, 3.0));
    GeneralTriangleGivens sas;
    sas.b = Length(s.uniform(0.05, 5.0) * k.value());
    sas.c = Length(s.uniform(0.05, 5.0) * k.value());
    sas.A = Angle(s.uniform(0.05, pi - 0.05));
    const GeneralTriangle t = solve_general_triangle(sas, k);
    CHECK(general_triangle_residuals(t).max() < 1e-9);
    CHECK(t.A.radians() + t.B.radians() + t.C.radians() < pi);

    GeneralTriangleGivens sss;
    sss.a = t.a, sss.b = t.b, sss.c = t.c;
    const GeneralTriangle u = solve_general_triangle(sss, k);
    CHECK(rel_err(u.A.radians(), t.A.radians()) < 1e-8);
    CHECK(rel_err(u.B.radians(), t.B.radians()) < 1e-8);
    CHECK(rel_err(u.C.radians(), t.C.radians()) < 1e-8);

    GeneralTriangleGivens asa;
    asa.B = t.B, asa.C = t.C, asa.a = t.a;
    const GeneralTriangle v = solve_general_triangle(asa, k);
    CHECK(rel_err(v.b.value(), t.b.value()) < 1e-8);
    CHECK(rel_err(v.c.value(), t.c.value()) < 1e-8);

    if (t.defect() > 0.05) {
      GeneralTriangleGivens aaa;
      aaa.A = t.A, aaa.B = t.B, aaa.C = t.C;
      const GeneralTriangle w = solve_general_triangle(aaa, k);
      CHECK(rel_err(w.a.value(), t.a.value()) < 1e-7);
      CHECK(rel_err(w.b.value(), t.b.value()) < 1e-7);
      CHECK(rel_err(w.c.value(), t.c.value()) < 1e-7);
    }
  }
}

TEST_CASE("SAS with a right angle matches the right-triangle solver") {
  GeneralTriangleGivens g;
  g.b = Length(0.8);
  g.c = Length(1.7);
  g.A = Angle(pi / 2);
  const GeneralTriangle t = solve_general_triangle(g, k1);
  const RightTriangle r = solve_right_triangle(legs(0.8, 1.7), k1);
  CHECK(t.a.value() == doctest::Approx(r.c.value()).epsilon(1e-13));
  CHECK(t.B.radians() == doctest::Approx(r.alpha.radians()).epsilon(1e-13));
  CHECK(t.C.radians() == doctest::Approx(r.beta.radians()).epsilon(1e-13));
}

TEST_CASE("equilateral AAA") {
  GeneralTriangleGivens g;
  g.A = g.B = g.C = Angle(pi / 6);
  const GeneralTriangle t = solve_general_triangle(g, k1);
  const double want = std::cos(pi / 6) / (1.0 - std::cos(pi / 6));
  CHECK(std::cosh(t.a.value()) == doctest::Approx(want).epsilon(1e-13));
  CHECK(t.area() == doctest::Approx(pi / 2));
}

TEST_CASE("general triangle errors") {
  GeneralTriangleGivens g;
  g.a = Length(1.0), g.b = Length(1.0), g.c = Length(3.0);
  CHECK_THROWS_AS(solve_general_triangle(g, k1), DomainError);
  GeneralTriangleGivens e;
  e.A = e.B = e.C = Angle(pi / 3);
  CHECK_THROWS_AS(solve_general_triangle(e, k1), DomainError);
  GeneralTriangleGivens z;
  z.a = Length(0.0), z.b = Length(1.0), z.c = Length(1.0);
  CHECK_THROWS_AS(solve_general_triangle(z, k1), DomainError);
}

TEST_CASE("defect is additive under a cevian") {
  Sampler s;
  for (int i = 0; i < 200; ++i) {
    GeneralTriangleGivens g;
    g.b = Length(s.uniform(0.2, 3.0));
    g.c = Length(s.uniform(0.2, 3.0));
    g.A = Angle(s.uniform(0.2, pi - 0.2));
    const GeneralTriangle t = solve_general_triangle(g, k1);
    // Split angle A; the cevian from A meets side a.
    const double share = s.uniform(0.1, 0.9);
    const double a1 = t.A.radians() * share;
    GeneralTriangleGivens left;  // vertices A, B, D: angles a1 at A, B at B
    left.A = Angle(a1);
    left.B = t.B;
    left.c = t.c;
    const GeneralTriangle l = solve_general_triangle(left, k1);
    GeneralTriangleGivens right;
    right.A = Angle(t.A.radians() - a1);
    right.B = t.C;
    right.c = t.b;
    const GeneralTriangle r = solve_general_triangle(right, k1);
    CHECK(rel_err(l.area() + r.area(), t.area()) < 1e-9);
  }
}
