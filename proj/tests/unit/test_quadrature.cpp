#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "hypkit/core_trig.hpp"
#include "hypkit/quadrature.hpp"

using namespace hypkit;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("rationals") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational::parse("3/9") == Rational(1, 3));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("1/7").str() == "1/7");
  CHECK_THROWS_AS(Rational::parse("x"), DomainError);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("Gauss constructibility") {
  CHECK(gauss_constructible(12));
  CHECK_FALSE(gauss_constructible(7));
  CHECK(gauss_constructible(2));
  CHECK(gauss_constructible(1));
  CHECK_FALSE(gauss_constructible(9));
  CHECK_FALSE(gauss_constructible(25));
  CHECK(gauss_constructible(65537LL * 257 * 4));
  CHECK_THROWS_AS(gauss_constructible(0), DomainError);

  // Multiplicative on coprime passing arguments.
  for (int a = 1; a < 200; ++a) {
    for (int b = 1; b < 200; ++b) {
      if (std::gcd(a, b) == 1 && gauss_constructible(a) && gauss_constructible(b)) {
        CHECK(gauss_constructible(static_cast<std::int64_t>(a) * b));
      }
    }
  }
  // Any squared odd factor is rejected.
  for (int p : {3, 5, 7, 11, 17}) CHECK_FALSE(gauss_constructible(p * p));
}

TEST_CASE("factorization") {
  CHECK(factorization_string(24) == "24 = 2^3 * 3");
  CHECK(factorization_string(1) == "1 = 1");
  CHECK(factorize(65537) == std::vector<PrimePower>{{65537, 1}});
}

TEST_CASE("admissibility") {
  CHECK(admissible_tan2z(Rational(1)));
  CHECK(admissible_tan2z(Rational(3)));
  CHECK_FALSE(admissible_tan2z(Rational(1, 7)));
  CHECK(admissible_tan2z(Rational(7, 3)));
  CHECK_THROWS_AS(admissible_tan2z(Rational(0)), DomainError);
  CHECK_THROWS_AS(admissible_tan2z(Rational(-1, 2)), DomainError);
}

TEST_CASE("plans") {
  const QuadraturePlan one = plan(Rational(1));
  CHECK(one.outcome == PlanOutcome::planned);
  CHECK(one.n == 4);
  CHECK(one.v_over_pi == Rational(1, 4));

  const QuadraturePlan three = plan(Rational(3));
  CHECK(three.n == 6);
  CHECK(three.v_over_pi == Rational(1, 6));

  const QuadraturePlan two = plan(Rational(2));
  CHECK(two.n == 5);
  CHECK(two.v_over_pi == Rational(1, 5));

  const QuadraturePlan third = plan(Rational(1, 3));
  CHECK(third.n == 4);
  CHECK(third.v_over_pi == Rational(5, 12));

  const QuadraturePlan seventh = plan(Rational(1, 7));
  CHECK_FALSE(seventh.admissible);
  CHECK(seventh.outcome == PlanOutcome::inadmissible);

  // Exact defect equation for every planned q.
  for (int den = 1; den <= 20; ++den) {
    for (int num = 1; num <= 10 * den; ++num) {
      const Rational q(num, den);
      if (q.den() != den || !admissible_tan2z(q)) continue;
      const QuadraturePlan p = plan(q);
      REQUIRE(p.outcome == PlanOutcome::planned);
      CHECK(Rational(p.n - 2) - Rational(p.n) * p.v_over_pi == q);
      CHECK(Rational(0) < p.v_over_pi);
      CHECK(p.v_over_pi < Rational(p.n - 2, p.n));
    }
  }
}

TEST_CASE("polygon dimensions") {
  const PolygonDimensions sq = polygon_dimensions(4, Angle(pi / 4), Curvature(1.0));
  CHECK(std::cosh(sq.circumradius.value()) == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-14));
  const PolygonDimensions hex = polygon_dimensions(6, Angle(pi / 6), Curvature(1.0));
  CHECK(std::cosh(hex.circumradius.value()) ==
        doctest::Approx(std::sqrt(3.0) * (2.0 + std::sqrt(3.0))).epsilon(1e-14));
  const PolygonDimensions tiny = polygon_dimensions(5, Angle(3 * pi / 5 - 1e-9), Curvature(1.0));
  CHECK(tiny.circumradius.value() < 1e-3);

  for (int n = 3; n <= 12; ++n) {
    const double v = 0.37 * (n - 2) * pi / n;
    const PolygonDimensions d = polygon_dimensions(n, Angle(v), Curvature(2.0));
    std::vector<Angle> corners(n, Angle(v));
    CHECK(polygon_area_from_angles(corners, Curvature(2.0)).value() ==
          doctest::Approx(2 * n * d.sector.area()).epsilon(1e-12));
  }
  CHECK_THROWS_AS(polygon_dimensions(4, Angle(pi / 2), Curvature(1.0)), DomainError);
  CHECK_THROWS_AS(polygon_dimensions(2, Angle(0.1), Curvature(1.0)), DomainError);
}

TEST_CASE("quadrature circle radius") {
  CHECK(quadrature_circle_radius(1.0, Curvature(1.0)).value() == doctest::Approx(2 * std::asinh(0.5)));
  for (double q : {0.5, 1.0, 3.0, 7.25}) {
    CHECK(circle_area(quadrature_circle_radius(q, Curvature(1.5)), Curvature(1.5)).value() ==
          doctest::Approx(pi * 2.25 * q).epsilon(1e-13));
  }
}
