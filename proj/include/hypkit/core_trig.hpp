#pragma once

// Closed-form measures of the hyperbolic plane with linear constant k.
//
// All functions are pure. Any evaluation that would need e^{x/k} with
// x/k > 700 throws OutOfRangeError instead of returning infinity.

#include <span>
#include <variant>

#include "hypkit/units.hpp"

namespace hypkit {

inline constexpr double kMaxExponent = 700.0;

/// e^{x/k}: ratio of two concentric horocyclic arcs a distance x apart.
ArcRatio arc_ratio(Length x, Curvature k);

/// Angle u with cot(u/2) = e^{y/k}. Strictly decreasing, pi/2 at y = 0.
Angle angle_of_parallelism(Length y, Curvature k);

/// Inverse of angle_of_parallelism: k ln cot(u/2). Requires 0 < u <= pi/2.
Length parallelism_segment(Angle u, Curvature k);

/// 2 pi k sinh(r/k).
Length circle_circumference(Length r, Curvature k);

/// 4 pi k^2 sinh^2(r/2k).
Area circle_area(Length r, Curvature k);

/// Length of the equidistant arc at distance b over a base segment a: a cosh(b/k).
Length equidistant_arc_length(Length a, Length b, Curvature k);

/// Horocyclic arc r = k sinh(y/k) over semichord y.
Length horocycle_arc_length(Length y, Curvature k);

/// Semichord y of the horocyclic arc whose straight chord is s:
/// sinh(s/2k) = sinh(y/k) / 2.
Length chord_to_semichord(Length s, Curvature k);

/// Ordinate y of the horocycle through the origin in rectangular
/// coordinates: e^{y/k} = e^{x/k} + sqrt(e^{2x/k} - 1).
Length lcurve_point(Length x, Curvature k);

/// Horocyclic arc length from the origin to abscissa x: k sqrt(X^2 - 1).
Length lcurve_arc_length(Length x, Curvature k);

/// Marker for the unbounded horocyclic strip.
struct Unbounded {
  friend bool operator==(Unbounded, Unbounded) = default;
};
inline constexpr Unbounded unbounded{};
using StripDepth = std::variant<Length, Unbounded>;

/// Area between a horocyclic arc r and its concentric arc at depth x:
/// r k (1 - e^{-x/k}); r k for the unbounded strip.
Area horocycle_sector_area(Length r, StripDepth x, Curvature k);

/// p k / 2.
double axial_volume(Length p, Curvature k);

struct EquidistantRegion {
  double area;                // p k sinh(q/k)
  double prism_volume;        // p k sinh(2q/k)/4 + p q / 2
  double revolution_surface;  // pi k p sinh(2q/k)
  double revolution_volume;   // pi k^2 p sinh^2(q/k)
};

/// Measures of the region between a segment p and its equidistant at height q.
EquidistantRegion equidistant_region_measures(Length p, Length q, Curvature k);

struct SphereMeasures {
  double great_circle;  // 2 pi k sinh(x/k)
  double surface;       // great_circle^2 / pi
  double volume;        // pi k^3 sinh(2x/k) - 2 pi k^2 x
};

SphereMeasures sphere_measures(Length x, Curvature k);

/// Cap of aperture u on a sphere (or horosphere) whose great circle is p:
/// p^2 (1 - cos u) / (2 pi).
Area spherical_cap_area(Length p, Angle u);

/// excess p^2 / (4 pi^2); excess in (0, 2 pi).
Area spherical_triangle_area(double excess, Length p);

/// Angle A of a right spherical triangle with leg arc a and hypotenuse arc b:
/// sin A = sin a / sin b. Independent of k.
Angle spherical_right_sine(Angle a, Angle b);

/// k^2 ((n-2) pi - sum of angles) for an n-gon, n >= 3. Zero angles
/// (ideal vertices) are allowed.
Area polygon_area_from_angles(std::span<const Angle> angles, Curvature k);

namespace detail {
/// sinh(t) - t without cancellation for small |t|.
double sinh_minus_identity(double t);
/// acosh(1 + x) for x >= 0 without cancellation for small x.
double acosh_one_plus(double x);
/// Throws OutOfRangeError when x / k exceeds kMaxExponent.
double scaled(double x, const Curvature& k);
}  // namespace detail

}  // namespace hypkit
