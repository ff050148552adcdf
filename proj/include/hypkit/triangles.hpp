#pragma once

// Right and general triangle solvers for the hyperbolic plane.
//
// Right triangles use the legs a, b, hypotenuse c, and the angles alpha,
// beta opposite a and b. The five relations every solution satisfies:
//   (I)   sin alpha = sinh(a/k) / sinh(c/k)
//   (II)  cos alpha = cosh(a/k) sin beta
//   (III) cosh(c/k) = cosh(a/k) cosh(b/k)
//   (IV)  sinh^2(c/k) = cosh^2(a/k) sinh^2(b/k) + sinh^2(a/k)
//   (V)   cot alpha cot beta = cosh(c/k)

#include <optional>

#include "hypkit/units.hpp"

namespace hypkit {

struct RightTriangle {
  Length a, b, c;
  Angle alpha, beta;
  Curvature k;

  /// pi/2 - alpha - beta
  double defect() const;
  double area() const;
};

/// Any two of the five elements (except a pair that only fixes one
/// element). A third or further element is checked for consistency.
struct RightTriangleGivens {
  std::optional<Length> a{}, b{}, c{};
  std::optional<Angle> alpha{}, beta{};
};

RightTriangle solve_right_triangle(const RightTriangleGivens& givens, Curvature k);

/// Relative residuals of the five right-triangle relations.
struct RightTriangleResiduals {
  double sine_rule;      // (I), for both legs
  double cosine_rule;    // (II), for both angles
  double pythagoras;     // (III)
  double sinh_variant;   // (IV)
  double cot_product;    // (V)
  double max() const;
};

RightTriangleResiduals right_triangle_residuals(const RightTriangle& t);

/// Sides a, b, c opposite angles A, B, C.
struct GeneralTriangle {
  Length a, b, c;
  Angle A, B, C;
  Curvature k;

  double defect() const;
  double area() const;
};

/// SSS, SAS (two sides and the included angle), ASA (two angles and the
/// included side) or AAA. Angles alone determine a hyperbolic triangle.
struct GeneralTriangleGivens {
  std::optional<Length> a{}, b{}, c{};
  std::optional<Angle> A{}, B{}, C{};
};

GeneralTriangle solve_general_triangle(const GeneralTriangleGivens& givens, Curvature k);

struct GeneralTriangleResiduals {
  double law_of_cosines;  // worst vertex, relative
  double sine_law;        // spread of sin A / sinh(a/k), relative
  double max() const;
};

GeneralTriangleResiduals general_triangle_residuals(const GeneralTriangle& t);

}  // namespace hypkit
