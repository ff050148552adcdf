#pragma once

// Records a Script while executing it, so that selector choices can be made
// by inspecting the live state. The recorded script replays to the same
// objects without any of the inspection logic.

#include <functional>
#include <string>
#include <vector>

#include "hypkit/construction.hpp"
#include "hypkit/quadrature.hpp"

namespace hypkit {

class ScriptBuilder {
 public:
  explicit ScriptBuilder(std::string name);

  const ConstructionState& state() const noexcept { return state_; }
  Script script() const;

  /// `base` if unused, else base_2, base_3, ...
  std::string fresh(const std::string& base) const;

  std::string point(const std::string& name, const disk::DiskPoint& p);
  std::string ideal(const std::string& name, const disk::IdealPoint& p);
  std::string length(const std::string& name, double value);
  std::string angle(const std::string& name, double radians, const std::string& certificate);
  /// The shared unit length parameter, created on first use.
  std::string unit();

  /// Applies a step whose outputs are already named in args; returns args[0].
  std::string step(const std::string& op, std::vector<std::string> args, Selector selector = Selector::none);

  /// Lower is better; evaluated on a scratch copy holding the step's output.
  using Score = std::function<double(const ConstructionState&, const std::string& out)>;

  /// Tries each selector on a scratch copy and applies the best-scoring one.
  std::string choose(const std::string& op, std::vector<std::string> args, std::vector<Selector> options,
                     const Score& score);

  std::string line(const std::string& out, const std::string& p, const std::string& q);
  std::string ray(const std::string& out, const std::string& p, const std::string& toward);
  std::string segment(const std::string& out, const std::string& p, const std::string& q);
  std::string circle_through(const std::string& out, const std::string& c, const std::string& p);
  std::string circle_radius(const std::string& out, const std::string& c, const std::string& a, const std::string& b);
  std::string circle_length(const std::string& out, const std::string& c, const std::string& len);

  /// Intersection point nearest (hyperbolically, or by boundary angle for
  /// ideal targets) to `target`.
  std::string intersect_near(const std::string& out, const std::string& a, const std::string& b,
                             const std::string& target);
  /// Intersection point farthest from `target`.
  std::string intersect_far(const std::string& out, const std::string& a, const std::string& b,
                            const std::string& target);

  struct Drop {
    std::string line;
    std::string foot;
  };
  Drop drop(const std::string& line_out, const std::string& foot_out, const std::string& p, const std::string& line);
  std::string erect(const std::string& out, const std::string& p, const std::string& line);
  std::string bisect_segment(const std::string& out, const std::string& a, const std::string& b);
  std::string bisect_angle(const std::string& out, const std::string& v, const std::string& q, const std::string& r);

  /// Copies angle QVR to the ray O->T, on the side whose new ideal end lies nearer `target`.
  std::string transfer_toward(const std::string& out, const std::string& v, const std::string& q,
                              const std::string& r, const std::string& o, const std::string& t,
                              const std::string& target);
  std::string transfer_param(const std::string& out, const std::string& angle, const std::string& o,
                             const std::string& t, Selector side);

  std::string mark(const std::string& out, const std::string& line, Selector end);
  /// The end of `line` nearer `target`.
  std::string mark_near(const std::string& out, const std::string& line, const std::string& target);

  /// Mirror image of p in `line`: drop, circle about the foot through p, far intersection.
  std::string reflect(const std::string& out, const std::string& p, const std::string& line);

  /// A ray from V making angle pi * over_pi with the ray V->T on `side`.
  /// Dyadic multiples of pi come from an erected perpendicular and
  /// bisections; other Gauss-constructible angles enter as certified
  /// angle parameters. Throws DomainError when the angle is not constructible.
  std::string lay_angle(const std::string& out, const std::string& v, const std::string& t,
                        const Rational& over_pi, Selector side);

  void check(const std::string& predicate, std::vector<AssertArg> args, double tol = 1e-9);
  void output(const std::string& name);

 private:
  ConstructionState state_;
  std::vector<Assertion> asserts_;
  std::vector<std::string> outputs_;
};

/// Distance used by selector scoring: hyperbolic between interior points,
/// boundary angle between ideal points, Euclidean otherwise.
double separation(const disk::AnyPoint& a, const disk::AnyPoint& b);

}  // namespace hypkit
