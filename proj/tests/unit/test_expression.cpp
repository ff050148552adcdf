#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hypkit/error.hpp"
#include "hypkit/expression.hpp"

using namespace hypkit;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("plain arithmetic") {
  CHECK(evaluate_expression("1") == 1.0);
  CHECK(evaluate_expression("-2.5") == -2.5);
  CHECK(evaluate_expression("1e-3") == 1e-3);
  CHECK(evaluate_expression("2 + 3 * 4") == 14.0);
  CHECK(evaluate_expression("(2 + 3) * 4") == 20.0);
  CHECK(evaluate_expression("2^3^2") == 512.0);
  CHECK(evaluate_expression("-2^2") == -4.0);
  CHECK(evaluate_expression("1/4") == 0.25);
}

TEST_CASE("constants, functions and implicit multiplication") {
  CHECK(evaluate_expression("pi") == pi);
  CHECK(evaluate_expression("e") == std::numbers::e);
  CHECK(evaluate_expression("2e") == 2.0 * std::numbers::e);
  CHECK(evaluate_expression("2pi") == 2.0 * pi);
  CHECK(evaluate_expression("2asinh0.5") == 2.0 * std::asinh(0.5));
  CHECK(evaluate_expression("2*asinh(1/2)") == 2.0 * std::asinh(0.5));
  CHECK(evaluate_expression("ln2") == std::log(2.0));
  CHECK(evaluate_expression("sqrt(2)sqrt(2)") == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(evaluate_expression("cosh(1)^2") == std::cosh(1.0) * std::cosh(1.0));
}

TEST_CASE("degree suffix") {
  CHECK(evaluate_expression("45d") == doctest::Approx(pi / 4.0).epsilon(1e-15));
  CHECK(evaluate_expression("30deg") == doctest::Approx(pi / 6.0).epsilon(1e-15));
  CHECK(evaluate_expression("sin30d") == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(evaluate_angle("45", AngleUnit::deg) == doctest::Approx(pi / 4.0).epsilon(1e-15));
  CHECK(evaluate_angle("45d", AngleUnit::deg) == doctest::Approx(pi / 4.0).epsilon(1e-15));
  CHECK(evaluate_angle("pi/4", AngleUnit::rad) == pi / 4.0);
}

TEST_CASE("malformed input is rejected with a position") {
  CHECK_THROWS_AS(evaluate_expression(""), DomainError);
  CHECK_THROWS_AS(evaluate_expression("2 +"), DomainError);
  CHECK_THROWS_AS(evaluate_expression("(1"), DomainError);
  CHECK_THROWS_AS(evaluate_expression("foo(1)"), DomainError);
  CHECK_THROWS_AS(evaluate_expression("1/0"), DomainError);
  CHECK_THROWS_AS(evaluate_expression("1 2 $"), DomainError);
  try {
    evaluate_expression("1 + ?");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("position 5") != std::string::npos);
  }
}
