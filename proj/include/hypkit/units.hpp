#pragma once

#include <cmath>
#include <numbers>

#include "hypkit/error.hpp"

namespace hypkit {

/// The linear constant k of the hyperbolic plane (length units).
///
/// Every closed-form quantity is a function of x/k; as k grows the formulas
/// approach their Euclidean counterparts.
class Curvature {
 public:
  explicit Curvature(double k = 1.0) : k_(k) {
    if (!std::isfinite(k) || k <= 0.0) throw DomainError("curvature constant k must be finite and positive");
  }
  double value() const noexcept { return k_; }

 private:
  double k_;
};

/// A non-negative finite magnitude in the same units as k.
class Length {
 public:
  explicit Length(double value) : value_(value) {
    if (!std::isfinite(value)) throw DomainError("length must be finite");
    if (value < 0.0) throw DomainError("length must be non-negative");
  }
  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// A non-negative finite area.
class Area {
 public:
  explicit Area(double value) : value_(value) {
    if (!std::isfinite(value)) throw DomainError("area must be finite");
    if (value < 0.0) throw DomainError("area must be non-negative");
  }
  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// An unsigned angle in [0, pi], stored in radians.
class Angle {
 public:
  explicit Angle(double radians) : radians_(radians) {
    constexpr double slack = 1e-14;
    if (!std::isfinite(radians)) throw DomainError("angle must be finite");
    if (radians < -slack || radians > std::numbers::pi + slack) throw DomainError("angle must lie in [0, pi]");
    if (radians < 0.0) radians_ = 0.0;
    if (radians > std::numbers::pi) radians_ = std::numbers::pi;
  }
  static Angle from_degrees(double degrees) { return Angle(degrees * std::numbers::pi / 180.0); }

  double radians() const noexcept { return radians_; }
  double degrees() const noexcept { return radians_ * 180.0 / std::numbers::pi; }

 private:
  double radians_;
};

/// Ratio X >= 1 of two concentric horocyclic arcs cut off by the same pair of axes.
class ArcRatio {
 public:
  explicit ArcRatio(double ratio) : ratio_(ratio) {
    if (!std::isfinite(ratio) || ratio < 1.0) throw DomainError("arc ratio must be finite and >= 1");
  }
  double value() const noexcept { return ratio_; }

 private:
  double ratio_;
};

}  // namespace hypkit
