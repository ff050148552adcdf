#pragma once

// Admissibility of circle quadrature and the regular polygon that realizes it.
//
// A circle whose area is pi k^2 tan^2 z can be squared geometrically exactly
// when tan^2 z is a positive rational whose reduced denominator is a power of
// two times distinct Fermat primes. The quadrature figure is a regular n-gon
// with interior angle v, area k^2 ((n - 2) pi - n v) = pi k^2 tan^2 z.

#include <cstdint>
#include <string>
#include <vector>

#include "hypkit/triangles.hpp"
#include "hypkit/units.hpp"

namespace hypkit {

/// Reduced fraction num/den with den > 0.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);
  /// Accepts "p", "p/q" and decimal literals such as "0.25".
  static Rational parse(const std::string& text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  std::int64_t num_;
  std::int64_t den_;
};

inline constexpr std::int64_t kFermatPrimes[] = {3, 5, 17, 257, 65537};
inline constexpr int kPolygonSearchBound = 1000;

struct PrimePower {
  std::int64_t prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization in increasing order; n >= 1.
std::vector<PrimePower> factorize(std::int64_t n);

/// "24 = 2^3 * 3"
std::string factorization_string(std::int64_t n);

/// True iff n = 2^m times a product of distinct Fermat primes (n >= 1).
bool gauss_constructible(std::int64_t n);

/// True iff q > 0 and its reduced denominator is Gauss-constructible.
/// Only the denominator is constrained; integers always pass.
bool admissible_tan2z(const Rational& q);

enum class PlanOutcome { planned, inadmissible, unplanned };

struct QuadraturePlan {
  Rational tan2z;
  bool admissible = false;
  PlanOutcome outcome = PlanOutcome::inadmissible;
  int n = 0;                 // side count, when planned
  Rational v_over_pi;        // interior angle / pi, when planned
  double target_area_over_k2 = 0.0;  // pi tan^2 z
  std::string certificate;   // factorizations of the denominators involved

  Angle v() const;
};

/// Smallest n >= 3 (up to kPolygonSearchBound) with v = pi ((n - 2) - q) / n
/// positive and v / (2 pi) of Gauss-constructible reduced denominator.
/// Exact rational arithmetic; q must be positive.
QuadraturePlan plan(const Rational& q);

struct PolygonDimensions {
  Length circumradius;
  Length apothem;
  Length side;
  /// Centre, edge midpoint, vertex: alpha = pi/n opposite the half side,
  /// beta = v/2 opposite the apothem.
  RightTriangle sector;
};

/// cosh(R/k) = cot(pi/n) cot(v/2); requires 0 < v < (n - 2) pi / n.
PolygonDimensions polygon_dimensions(int n, Angle v, Curvature k);

/// Radius s of the circle of area pi k^2 tan2z: sinh(s/2k) = sqrt(tan2z) / 2.
Length quadrature_circle_radius(double tan2z, Curvature k);

}  // namespace hypkit
