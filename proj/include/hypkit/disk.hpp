#pragma once

// Conformal unit-disk model of the hyperbolic plane with k = 1.
//
// Lengths come from the log cross-ratio of Euclidean chords
//   AM = log(AP * XM / (XA * MP))
// where X, P are the ideal ends of the geodesic through A and M, X on A's
// side. Angles are Euclidean tangent angles (the model is conformal).

#include <complex>
#include <optional>
#include <variant>
#include <vector>

#include "hypkit/units.hpp"

namespace hypkit::disk {

using Complex = std::complex<double>;

/// Points with |z| above this are treated as ideal and rejected as interior.
inline constexpr double kMaxInteriorRadius = 1.0 - 1e-10;
/// Separation below which two points are considered coincident.
inline constexpr double kCoincidenceTol = 1e-12;
/// Orthogonal-circle radius above which a geodesic is drawn as a diameter.
inline constexpr double kMaxArcRadius = 1e6;

/// An interior point of the unit disk.
class DiskPoint {
 public:
  DiskPoint(double u, double v);
  explicit DiskPoint(Complex z);

  double u() const noexcept { return z_.real(); }
  double v() const noexcept { return z_.imag(); }
  Complex z() const noexcept { return z_; }

  friend bool operator==(const DiskPoint&, const DiskPoint&) = default;

 private:
  Complex z_;
};

/// A point of the boundary circle, at infinite distance from every interior point.
class IdealPoint {
 public:
  explicit IdealPoint(double theta);
  /// Projects z radially onto the unit circle; z must be non-zero.
  static IdealPoint from_direction(Complex z);

  /// Angle in (-pi, pi].
  double theta() const noexcept { return theta_; }
  Complex z() const noexcept { return z_; }

  friend bool operator==(const IdealPoint& a, const IdealPoint& b) { return a.theta_ == b.theta_; }

 private:
  double theta_;
  Complex z_;
};

using AnyPoint = std::variant<DiskPoint, IdealPoint>;

Complex position(const AnyPoint& p);

/// Shortest angular separation of two ideal points, in [0, pi].
double angular_gap(const IdealPoint& a, const IdealPoint& b);

/// Euclidean line through `point` with unit `direction` (a diameter when point = 0).
struct EuclideanLine {
  Complex point;
  Complex direction;
};

struct EuclideanCircle {
  Complex center;
  double radius;
};

using Realization = std::variant<EuclideanLine, EuclideanCircle>;

/// Oriented geodesic from ideal end `start` to ideal end `end`.
class Geodesic {
 public:
  Geodesic(IdealPoint start, IdealPoint end);

  const IdealPoint& start() const noexcept { return start_; }
  const IdealPoint& end() const noexcept { return end_; }
  const Realization& realization() const noexcept { return realization_; }
  bool is_diameter() const noexcept { return std::holds_alternative<EuclideanLine>(realization_); }
  Geodesic reversed() const { return Geodesic(end_, start_); }

 private:
  IdealPoint start_;
  IdealPoint end_;
  Realization realization_;
};

struct HyperbolicCircle {
  DiskPoint center;
  double radius;  // hyperbolic, > 0
};

/// Horocycle centred at the ideal point omega passing through `through`.
struct Horocycle {
  IdealPoint omega;
  DiskPoint through;
};

/// Curve at signed distance `offset` from `base`; positive offsets lie to
/// the left of the direction start -> end.
struct Equidistant {
  Geodesic base;
  double offset;
};

using CurveObject = std::variant<HyperbolicCircle, Horocycle, Equidistant>;
using Shape = std::variant<Geodesic, CurveObject>;

Realization realize(const CurveObject& curve);
Realization realize(const Shape& shape);

/// Orientation-preserving or -reversing isometry of the disk, kept in the
/// normal form z -> (a w + b) / (conj(b) w + conj(a)), w = z or conj(z).
/// Every such map is a product of at most three reflections in geodesics.
class Isometry {
 public:
  static Isometry identity();
  static Isometry reflection(const Geodesic& g);
  /// Rotation by phi (radians, counter-clockwise) about an interior point.
  static Isometry rotation(const DiskPoint& center, double phi);
  /// Translation moving every point of g a distance d towards g.end().
  static Isometry translation(const Geodesic& g, double d);
  /// The map z -> (z - p) / (1 - conj(p) z), sending p to the origin.
  static Isometry to_origin(const DiskPoint& p);
  /// Sends g to the real diameter with start -> -1 and end -> 1.
  static Isometry standardize(const Geodesic& g);

  Complex apply(Complex z) const;
  DiskPoint apply(const DiskPoint& p) const;
  IdealPoint apply(const IdealPoint& p) const;
  AnyPoint apply(const AnyPoint& p) const;
  Geodesic apply(const Geodesic& g) const;
  CurveObject apply(const CurveObject& c) const;

  /// (*this) after `inner`.
  Isometry compose(const Isometry& inner) const;
  Isometry inverse() const;
  bool reverses_orientation() const noexcept { return reflecting_; }

 private:
  Isometry(Complex a, Complex b, bool reflecting);
  Complex a_;
  Complex b_;
  bool reflecting_;
};

/// Hyperbolic distance by the chord cross-ratio.
Length dist(const DiskPoint& a, const DiskPoint& m);

/// The unique geodesic through two distinct points (interior or ideal),
/// oriented so that start lies beyond `a` and end beyond `b`.
Geodesic geodesic_through(const AnyPoint& a, const AnyPoint& b);

/// Interior intersections of two shapes, at most two. Two points are
/// ordered by the sign of (c_b - c_a) x (p - c_a), positive first, where
/// c_x is the Euclidean centre of the realization (origin for diameters).
std::vector<DiskPoint> intersect(const Shape& a, const Shape& b);

struct Perpendicular {
  DiskPoint foot;
  Geodesic line;  // oriented from beyond P through P towards the foot
};

/// Perpendicular from P to g (erected at P when P lies on g).
Perpendicular perpendicular(const DiskPoint& p, const Geodesic& g);

/// The geodesic from an ideal point perpendicular to g, and its foot.
/// omega must not be an end of g.
Perpendicular perpendicular(const IdealPoint& omega, const Geodesic& g);

/// Unit tangent at P of the geodesic ray from P towards q.
Complex tangent_direction(const DiskPoint& p, const AnyPoint& q);

/// Point at distance d from P along the geodesic leaving P with unit tangent dir.
DiskPoint point_along(const DiskPoint& p, Complex dir, double d);

/// Ideal end of the geodesic ray leaving P with unit tangent dir.
IdealPoint ideal_along(const DiskPoint& p, Complex dir);

/// Angle at P between the rays P->Q and P->R, in [0, pi].
Angle measure_angle(const DiskPoint& p, const AnyPoint& q, const AnyPoint& r);

/// Hyperbolic distance from P to the geodesic g.
Length distance_to(const DiskPoint& p, const Geodesic& g);

/// The point F of a corresponding to B with respect to the ideal end omega of a:
/// the transversal BF makes equal angles with the rays towards omega.
DiskPoint corresponding_point(const DiskPoint& b, const Geodesic& a, const IdealPoint& omega);

/// Angle at P between the perpendicular to g and the ray to the nearer end of g.
Angle angle_of_parallelism_numeric(const DiskPoint& p, const Geodesic& g);

/// Euclidean circle through three non-collinear points.
EuclideanCircle circumcircle(Complex a, Complex b, Complex c);

}  // namespace hypkit::disk
