#include "hypkit/core_trig.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hypkit {

namespace {
constexpr double pi = std::numbers::pi;
}

namespace detail {

double sinh_minus_identity(double t) {
  const double a = std::abs(t);
  if (a > 0.5) return std::sinh(t) - t;
  // t^3/3! + t^5/5! + ... ; converges to full precision within 12 terms here.
  const double t2 = t * t;
  double term = t * t2 / 6.0;
  double sum = term;
  for (int n = 4; n < 40; n += 2) {
    term *= t2 / (static_cast<double>(n) * (n + 1));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double acosh_one_plus(double x) {
  if (x < 0.0) x = 0.0;
  return std::log1p(x + std::sqrt(x * (x + 2.0)));
}

double scaled(double x, const Curvature& k) {
  const double t = x / k.value();
  if (t > kMaxExponent) {
    throw OutOfRangeError("argument x/k = " + std::to_string(t) + " exceeds the exponential range limit of " +
                          std::to_string(kMaxExponent));
  }
  return t;
}

}  // namespace detail

using detail::scaled;

ArcRatio arc_ratio(Length x, Curvature k) { return ArcRatio(std::exp(scaled(x.value(), k))); }

Angle angle_of_parallelism(Length y, Curvature k) {
  return Angle(2.0 * std::atan(std::exp(-scaled(y.value(), k))));
}

Length parallelism_segment(Angle u, Curvature k) {
  const double r = u.radians();
  if (r <= 0.0) throw DomainError("parallelism angle must be positive");
  if (r > pi / 2.0) throw DomainError("parallelism angle cannot be obtuse");
  // ln cot(u/2) = asinh(cot u); the cosine is taken as sin(pi/2 - u) so
  // that u = pi/2 maps to exactly 0.
  return Length(k.value() * std::asinh(std::sin(pi / 2.0 - r) / std::sin(r)));
}

Length circle_circumference(Length r, Curvature k) {
  return Length(2.0 * pi * k.value() * std::sinh(scaled(r.value(), k)));
}

Area circle_area(Length r, Curvature k) {
  const double h = std::sinh(scaled(r.value(), k) / 2.0);
  return Area(4.0 * pi * k.value() * k.value() * h * h);
}

Length equidistant_arc_length(Length a, Length b, Curvature k) {
  return Length(a.value() * std::cosh(scaled(b.value(), k)));
}

Length horocycle_arc_length(Length y, Curvature k) { return Length(k.value() * std::sinh(scaled(y.value(), k))); }

Length chord_to_semichord(Length s, Curvature k) {
  const double half = std::sinh(scaled(s.value(), k) / 2.0);
  return Length(k.value() * std::asinh(2.0 * half));
}

Length lcurve_point(Length x, Curvature k) {
  const double t = scaled(x.value(), k);
  // Y = X + sqrt(X^2 - 1) with X = e^t, so y/k = ln Y = acosh(X).
  // X - 1 = expm1(t) keeps the small-x branch accurate.
  return Length(k.value() * detail::acosh_one_plus(std::expm1(t)));
}

Length lcurve_arc_length(Length x, Curvature k) {
  const double t = scaled(x.value(), k);
  // X^2 - 1 = expm1(2t)
  return Length(k.value() * std::sqrt(std::expm1(2.0 * t)));
}

Area horocycle_sector_area(Length r, StripDepth x, Curvature k) {
  const double rk = r.value() * k.value();
  if (std::holds_alternative<Unbounded>(x)) return Area(rk);
  const double t = std::get<Length>(x).value() / k.value();
  return Area(-rk * std::expm1(-t));
}

double axial_volume(Length p, Curvature k) { return p.value() * k.value() / 2.0; }

EquidistantRegion equidistant_region_measures(Length p, Length q, Curvature k) {
  const double kv = k.value();
  const double t = scaled(2.0 * q.value(), k) / 2.0;
  const double pv = p.value();
  const double sh = std::sinh(t);
  EquidistantRegion out{};
  out.area = pv * kv * sh;
  out.prism_volume = pv * kv * std::sinh(2.0 * t) / 4.0 + pv * q.value() / 2.0;
  out.revolution_surface = pi * kv * pv * std::sinh(2.0 * t);
  out.revolution_volume = pi * kv * kv * pv * sh * sh;
  return out;
}

SphereMeasures sphere_measures(Length x, Curvature k) {
  const double kv = k.value();
  const double t = scaled(2.0 * x.value(), k) / 2.0;
  SphereMeasures out{};
  out.great_circle = 2.0 * pi * kv * std::sinh(t);
  out.surface = out.great_circle * out.great_circle / pi;
  // pi k^3 sinh(2t) - 2 pi k^2 x = pi k^3 (sinh(2t) - 2t)
  out.volume = pi * kv * kv * kv * detail::sinh_minus_identity(2.0 * t);
  return out;
}

Area spherical_cap_area(Length p, Angle u) {
  if (p.value() <= 0.0) throw DomainError("great-circle length must be positive");
  // 1 - cos u = 2 sin^2(u/2)
  const double s = std::sin(u.radians() / 2.0);
  return Area(p.value() * p.value() * 2.0 * s * s / (2.0 * pi));
}

Area spherical_triangle_area(double excess, Length p) {
  if (!std::isfinite(excess) || excess <= 0.0 || excess >= 2.0 * pi) {
    throw DomainError("spherical excess must lie in (0, 2 pi)");
  }
  if (p.value() <= 0.0) throw DomainError("great-circle length must be positive");
  return Area(excess * p.value() * p.value() / (4.0 * pi * pi));
}

Angle spherical_right_sine(Angle a, Angle b) {
  const double ar = a.radians();
  const double br = b.radians();
  if (ar <= 0.0 || br >= pi || ar > br) throw DomainError("spherical legs require 0 < a <= b < pi");
  const double ratio = std::sin(ar) / std::sin(br);
  if (ratio > 1.0 + 1e-15) throw DomainError("sin a exceeds sin b: no right spherical triangle");
  return Angle(std::asin(std::min(1.0, ratio)));
}

Area polygon_area_from_angles(std::span<const Angle> angles, Curvature k) {
  if (angles.size() < 3) throw DomainError("a polygon needs at least three angles");
  double sum = 0.0;
  for (const Angle& a : angles) {
    if (a.radians() >= pi) throw DomainError("polygon angles must be below pi");
    sum += a.radians();
  }
  const double defect = static_cast<double>(angles.size() - 2) * pi - sum;
  if (defect <= 0.0) throw DomainError("angle sum leaves no positive defect: no such polygon in the hyperbolic plane");
  return Area(k.value() * k.value() * defect);
}

}  // namespace hypkit
