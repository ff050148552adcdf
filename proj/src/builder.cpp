#include "hypkit/builder.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "hypkit/error.hpp"

namespace hypkit {

using disk::AnyPoint;
using disk::Complex;
using disk::DiskPoint;
using disk::IdealPoint;

double separation(const AnyPoint& a, const AnyPoint& b) {
  if (const auto* p = std::get_if<DiskPoint>(&a)) {
    if (const auto* q = std::get_if<DiskPoint>(&b)) return disk::dist(*p, *q).value();
  }
  if (const auto* p = std::get_if<IdealPoint>(&a)) {
    if (const auto* q = std::get_if<IdealPoint>(&b)) return disk::angular_gap(*p, *q);
  }
  return std::abs(disk::position(a) - disk::position(b));
}

ScriptBuilder::ScriptBuilder(std::string name) { state_.log().name = std::move(name); }

Script ScriptBuilder::script() const {
  Script s = state_.log();
  s.asserts = asserts_;
  s.outputs = outputs_;
  return s;
}

std::string ScriptBuilder::fresh(const std::string& base) const {
  if (!state_.contains(base)) return base;
  for (int i = 2;; ++i) {
    std::string name = base + "_" + std::to_string(i);
    if (!state_.contains(name)) return name;
  }
}

namespace {

void add_param(ConstructionState& state, Param p) {
  seed_param(state, p);
  state.log().params.push_back(std::move(p));
}

}  // namespace

std::string ScriptBuilder::point(const std::string& name, const DiskPoint& p) {
  add_param(state_, Param{name, ParamKind::point, {p.u(), p.v()}, {}});
  return name;
}

std::string ScriptBuilder::ideal(const std::string& name, const IdealPoint& p) {
  add_param(state_, Param{name, ParamKind::ideal, {p.theta()}, {}});
  return name;
}

std::string ScriptBuilder::length(const std::string& name, double value) {
  add_param(state_, Param{name, ParamKind::length, {value}, {}});
  return name;
}

std::string ScriptBuilder::angle(const std::string& name, double radians, const std::string& certificate) {
  add_param(state_, Param{name, ParamKind::angle, {radians}, certificate});
  return name;
}

std::string ScriptBuilder::unit() {
  if (!state_.contains("unit")) length("unit", 1.0);
  return "unit";
}

std::string ScriptBuilder::step(const std::string& op, std::vector<std::string> args, Selector selector) {
  std::string out = args.at(0);
  apply_step(state_, Step{op, std::move(args), selector}, state_.log().steps.size() + 1);
  return out;
}

std::string ScriptBuilder::choose(const std::string& op, std::vector<std::string> args,
                                  std::vector<Selector> options, const Score& score) {
  double best = std::numeric_limits<double>::infinity();
  Selector chosen = Selector::none;
  std::string last_error = "no admissible choice";
  for (Selector sel : options) {
    ConstructionState scratch = state_;
    try {
      apply_step(scratch, Step{op, args, sel}, scratch.log().steps.size() + 1);
      const double s = score(scratch, args.at(0));
      if (s < best) {
        best = s;
        chosen = sel;
      }
    } catch (const ConstructionError& e) {
      last_error = e.what();
    }
  }
  if (chosen == Selector::none) throw ConstructionError(state_.log().steps.size() + 1, op + ": " + last_error);
  return step(op, std::move(args), chosen);
}

std::string ScriptBuilder::line(const std::string& out, const std::string& p, const std::string& q) {
  return step("line", {out, p, q});
}

std::string ScriptBuilder::ray(const std::string& out, const std::string& p, const std::string& toward) {
  return step("ray", {out, p, toward});
}

std::string ScriptBuilder::segment(const std::string& out, const std::string& p, const std::string& q) {
  return step("segment", {out, p, q});
}

std::string ScriptBuilder::circle_through(const std::string& out, const std::string& c, const std::string& p) {
  return step("circle_center_through", {out, c, p});
}

std::string ScriptBuilder::circle_radius(const std::string& out, const std::string& c, const std::string& a,
                                         const std::string& b) {
  return step("circle_center_radius", {out, c, a, b});
}

std::string ScriptBuilder::circle_length(const std::string& out, const std::string& c, const std::string& len) {
  return step("circle_center_radius", {out, c, len});
}

namespace {

std::vector<Selector> intersection_options(const ConstructionState& s, const std::string& a, const std::string& b) {
  const std::size_t n = intersection_candidates(s, a, b).size();
  if (n == 1) return {Selector::only};
  if (n == 2) return {Selector::first, Selector::second};
  return {Selector::only};  // fails with a located error
}

}  // namespace

std::string ScriptBuilder::intersect_near(const std::string& out, const std::string& a, const std::string& b,
                                          const std::string& target) {
  const AnyPoint t = state_.point(target);
  return choose("intersect", {out, a, b}, intersection_options(state_, a, b),
                [&](const ConstructionState& s, const std::string& o) { return separation(s.point(o), t); });
}

std::string ScriptBuilder::intersect_far(const std::string& out, const std::string& a, const std::string& b,
                                         const std::string& target) {
  const AnyPoint t = state_.point(target);
  return choose("intersect", {out, a, b}, intersection_options(state_, a, b),
                [&](const ConstructionState& s, const std::string& o) { return -separation(s.point(o), t); });
}

ScriptBuilder::Drop ScriptBuilder::drop(const std::string& line_out, const std::string& foot_out, const std::string& p,
                                        const std::string& line) {
  step("perpendicular_drop", {line_out, foot_out, p, line});
  return {line_out, foot_out};
}

std::string ScriptBuilder::erect(const std::string& out, const std::string& p, const std::string& line) {
  return step("perpendicular_erect", {out, p, line});
}

std::string ScriptBuilder::bisect_segment(const std::string& out, const std::string& a, const std::string& b) {
  return step("bisect_segment", {out, a, b});
}

std::string ScriptBuilder::bisect_angle(const std::string& out, const std::string& v, const std::string& q,
                                        const std::string& r) {
  return step("bisect_angle", {out, v, q, r});
}

std::string ScriptBuilder::transfer_toward(const std::string& out, const std::string& v, const std::string& q,
                                           const std::string& r, const std::string& o, const std::string& t,
                                           const std::string& target) {
  const AnyPoint goal = state_.point(target);
  return choose("transfer_angle", {out, v, q, r, o, t}, {Selector::left, Selector::right},
                [&](const ConstructionState& s, const std::string& name) { return separation(s.line(name).to, goal); });
}

std::string ScriptBuilder::transfer_param(const std::string& out, const std::string& angle, const std::string& o,
                                          const std::string& t, Selector side) {
  return step("transfer_angle", {out, angle, o, t}, side);
}

std::string ScriptBuilder::mark(const std::string& out, const std::string& line, Selector end) {
  return step("mark_ideal", {out, line}, end);
}

std::string ScriptBuilder::mark_near(const std::string& out, const std::string& line, const std::string& target) {
  const AnyPoint goal = state_.point(target);
  return choose("mark_ideal", {out, line}, {Selector::start, Selector::end},
                [&](const ConstructionState& s, const std::string& o) { return separation(s.point(o), goal); });
}

std::string ScriptBuilder::reflect(const std::string& out, const std::string& p, const std::string& line) {
  const Drop d = drop(fresh(out + "_perp"), fresh(out + "_foot"), p, line);
  const std::string c = circle_through(fresh(out + "_circ"), d.foot, p);
  return intersect_far(out, c, d.line, p);
}

std::string ScriptBuilder::lay_angle(const std::string& out, const std::string& v, const std::string& t,
                                     const Rational& over_pi, Selector side) {
  if (!(Rational(0) < over_pi && over_pi < Rational(1))) throw DomainError("angle must lie strictly between 0 and pi");
  if (side != Selector::left && side != Selector::right) throw DomainError("side must be left or right");
  const Rational turn = over_pi / Rational(2);
  if (!gauss_constructible(turn.den())) {
    throw DomainError("angle " + over_pi.str() + " pi is not constructible: " + factorization_string(turn.den()));
  }

  const std::int64_t den = over_pi.den();
  if ((den & (den - 1)) != 0) {
    const std::string cert = "2 pi * " + turn.str() + ", " + factorization_string(turn.den());
    const std::string a = angle(fresh(out + "_angle"), over_pi.value() * std::numbers::pi, cert);
    return transfer_param(out, a, v, t, side);
  }

  // Dyadic: bisect between the ray V->T, the perpendicular, and the backward ray.
  const DiskPoint vp = state_.interior_point(v);
  const Complex base = disk::tangent_direction(vp, state_.point(t));
  const std::string axis = line(fresh(out + "_axis"), v, t);
  const std::string perp = erect(fresh(out + "_perp"), v, axis);
  const double want = side == Selector::left ? 1.0 : -1.0;
  const std::string up = choose("mark_ideal", {fresh(out + "_up"), perp}, {Selector::start, Selector::end},
                                [&](const ConstructionState& s, const std::string& o) {
                                  const Complex d = disk::tangent_direction(vp, s.point(o));
                                  return -want * std::imag(d * std::conj(base));
                                });
  if (over_pi == Rational(1, 2)) return ray(out, v, up);

  Rational lo(0), hi(1, 2);
  std::string lo_pt = t, hi_pt = up;
  if (Rational(1, 2) < over_pi) {
    lo = Rational(1, 2);
    hi = Rational(1);
    lo_pt = up;
    hi_pt = mark(fresh(out + "_back"), axis, Selector::start);
  }
  for (int depth = 0;; ++depth) {
    const Rational mid = (lo + hi) / Rational(2);
    if (mid == over_pi) return bisect_angle(out, v, lo_pt, hi_pt);
    const std::string r = bisect_angle(fresh(out + "_bis"), v, lo_pt, hi_pt);
    const std::string end = mark(fresh(out + "_bis_end"), r, Selector::end);
    if (mid < over_pi) {
      lo = mid;
      lo_pt = end;
    } else {
      hi = mid;
      hi_pt = end;
    }
    if (depth > 60) throw DomainError("bisection depth exceeded");
  }
}

void ScriptBuilder::check(const std::string& predicate, std::vector<AssertArg> args, double tol) {
  asserts_.push_back(Assertion{predicate, std::move(args), tol});
}

void ScriptBuilder::output(const std::string& name) {
  if (!state_.contains(name)) throw DomainError("output '" + name + "' does not exist");
  outputs_.push_back(name);
}

}  // namespace hypkit
