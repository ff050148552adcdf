#include "hypkit/construction.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hypkit/core_trig.hpp"
#include "hypkit/error.hpp"

namespace hypkit {

using disk::AnyPoint;
using disk::Complex;
using disk::DiskPoint;
using disk::Geodesic;
using disk::IdealPoint;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double kOnLineTol = 1e-9;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const char* object_kind(const Object& o) {
  return std::visit(Overloaded{
                        [](const AnyPoint& p) { return std::holds_alternative<DiskPoint>(p) ? "point" : "ideal point"; },
                        [](const LineObject&) { return "line"; },
                        [](const disk::CurveObject&) { return "circle"; },
                        [](const Scalar& s) { return s.kind == ParamKind::length ? "length" : "angle"; },
                    },
                    o);
}

}  // namespace

// ------------------------------------------------------------------ names

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

const char* to_string(Selector s) {
  switch (s) {
    case Selector::none: return "none";
    case Selector::only: return "only";
    case Selector::first: return "first";
    case Selector::second: return "second";
    case Selector::start: return "start";
    case Selector::end: return "end";
    case Selector::left: return "left";
    case Selector::right: return "right";
  }
  return "none";
}

Selector selector_from_string(const std::string& text) {
  for (Selector s : {Selector::none, Selector::only, Selector::first, Selector::second, Selector::start, Selector::end,
                     Selector::left, Selector::right}) {
    if (text == to_string(s)) return s;
  }
  throw DomainError("unknown selector '" + text + "'");
}

const char* to_string(ParamKind k) {
  switch (k) {
    case ParamKind::point: return "point";
    case ParamKind::ideal: return "ideal";
    case ParamKind::length: return "length";
    case ParamKind::angle: return "angle";
  }
  return "point";
}

ParamKind param_kind_from_string(const std::string& text) {
  for (ParamKind k : {ParamKind::point, ParamKind::ideal, ParamKind::length, ParamKind::angle}) {
    if (text == to_string(k)) return k;
  }
  throw DomainError("unknown parameter kind '" + text + "'");
}

// ------------------------------------------------------------------ state

const Object& ConstructionState::at(const std::string& name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) throw DomainError("unknown object '" + name + "'");
  return objects_[it->second].second;
}

void ConstructionState::add(const std::string& name, Object object) {
  if (!valid_name(name)) throw DomainError("invalid object name '" + name + "'");
  if (contains(name)) throw DomainError("name '" + name + "' is already defined");
  index_.emplace(name, objects_.size());
  objects_.emplace_back(name, std::move(object));
}

AnyPoint ConstructionState::point(const std::string& name) const {
  const auto* p = std::get_if<AnyPoint>(&at(name));
  if (!p) throw DomainError("'" + name + "' is a " + object_kind(at(name)) + ", not a point");
  return *p;
}

DiskPoint ConstructionState::interior_point(const std::string& name) const {
  const AnyPoint p = point(name);
  if (const auto* d = std::get_if<DiskPoint>(&p)) return *d;
  throw DomainError("'" + name + "' is an ideal point; an interior point is required");
}

IdealPoint ConstructionState::ideal_point(const std::string& name) const {
  const AnyPoint p = point(name);
  if (const auto* w = std::get_if<IdealPoint>(&p)) return *w;
  throw DomainError("'" + name + "' is an interior point; an ideal point is required");
}

const LineObject& ConstructionState::line(const std::string& name) const {
  const auto* l = std::get_if<LineObject>(&at(name));
  if (!l) throw DomainError("'" + name + "' is a " + object_kind(at(name)) + ", not a line");
  return *l;
}

disk::Shape ConstructionState::shape(const std::string& name) const {
  const Object& o = at(name);
  if (const auto* l = std::get_if<LineObject>(&o)) return disk::Shape{l->geodesic};
  if (const auto* c = std::get_if<disk::CurveObject>(&o)) return disk::Shape{*c};
  throw DomainError("'" + name + "' is a " + object_kind(o) + ", not a line or circle");
}

const Scalar& ConstructionState::scalar(const std::string& name, ParamKind kind) const {
  const auto* s = std::get_if<Scalar>(&at(name));
  if (!s || s->kind != kind) {
    throw DomainError("'" + name + "' is a " + object_kind(at(name)) + ", not a " + to_string(kind));
  }
  return *s;
}

// ------------------------------------------------------------------ steps

std::vector<DiskPoint> intersection_candidates(const ConstructionState& state, const std::string& a,
                                               const std::string& b) {
  return disk::intersect(state.shape(a), state.shape(b));
}

void seed_param(ConstructionState& state, const Param& param) {
  switch (param.kind) {
    case ParamKind::point:
      if (param.value.size() != 2) throw DomainError("point parameter '" + param.name + "' needs [u, v]");
      state.add(param.name, AnyPoint{DiskPoint(param.value[0], param.value[1])});
      return;
    case ParamKind::ideal:
      if (param.value.size() != 1) throw DomainError("ideal parameter '" + param.name + "' needs one angle");
      state.add(param.name, AnyPoint{IdealPoint(param.value[0])});
      return;
    case ParamKind::length:
    case ParamKind::angle: {
      if (param.value.size() != 1) throw DomainError("parameter '" + param.name + "' needs one value");
      const double v = param.value[0];
      if (param.kind == ParamKind::length) {
        (void)Length(v);
      } else {
        (void)Angle(v);
      }
      state.add(param.name, Scalar{param.kind, v, param.certificate});
      return;
    }
  }
}

namespace {

void expect_args(const Step& step, std::size_t n) {
  if (step.args.size() != n) {
    throw DomainError("'" + step.op + "' takes " + std::to_string(n) + " arguments, got " +
                      std::to_string(step.args.size()));
  }
}

void expect_selector(const Step& step, std::initializer_list<Selector> allowed) {
  for (Selector s : allowed) {
    if (step.selector == s) return;
  }
  throw DomainError("'" + step.op + "' does not accept selector '" + to_string(step.selector) + "'");
}

LineObject ray_from(const DiskPoint& origin, Complex dir) {
  const IdealPoint end = disk::ideal_along(origin, dir);
  return LineObject{disk::geodesic_through(origin, end), LineKind::ray, origin, end};
}

Complex rotate(Complex dir, double angle, Selector side) {
  return dir * std::polar(1.0, side == Selector::left ? angle : -angle);
}

void execute(ConstructionState& s, const Step& step) {
  const auto& a = step.args;
  const std::string& op = step.op;

  if (op == "line" || op == "ray" || op == "segment") {
    expect_args(step, 3);
    expect_selector(step, {Selector::none});
    if (op == "line") {
      const Geodesic g = disk::geodesic_through(s.point(a[1]), s.point(a[2]));
      s.add(a[0], LineObject{g, LineKind::line, s.point(a[1]), s.point(a[2])});
    } else if (op == "ray") {
      const DiskPoint p = s.interior_point(a[1]);
      const Geodesic g = disk::geodesic_through(p, s.point(a[2]));
      s.add(a[0], LineObject{g, LineKind::ray, p, g.end()});
    } else {
      const DiskPoint p = s.interior_point(a[1]), q = s.interior_point(a[2]);
      s.add(a[0], LineObject{disk::geodesic_through(p, q), LineKind::segment, p, q});
    }
    return;
  }

  if (op == "circle_center_through") {
    expect_args(step, 3);
    expect_selector(step, {Selector::none});
    const DiskPoint c = s.interior_point(a[1]);
    const double r = disk::dist(c, s.interior_point(a[2])).value();
    if (r <= 0.0) throw DomainError("circle through its own centre");
    s.add(a[0], disk::CurveObject{disk::HyperbolicCircle{c, r}});
    return;
  }

  if (op == "circle_center_radius") {
    expect_selector(step, {Selector::none});
    if (a.size() != 3 && a.size() != 4) throw DomainError("'circle_center_radius' takes [out, C, A, B] or [out, C, length]");
    const DiskPoint c = s.interior_point(a[1]);
    const double r = a.size() == 4 ? disk::dist(s.interior_point(a[2]), s.interior_point(a[3])).value()
                                   : s.scalar(a[2], ParamKind::length).value;
    if (r <= 0.0) throw DomainError("circle radius must be positive");
    s.add(a[0], disk::CurveObject{disk::HyperbolicCircle{c, r}});
    return;
  }

  if (op == "intersect") {
    expect_args(step, 3);
    expect_selector(step, {Selector::only, Selector::first, Selector::second});
    const std::vector<DiskPoint> pts = intersection_candidates(s, a[1], a[2]);
    if (pts.empty()) throw DomainError("'" + a[1] + "' and '" + a[2] + "' do not meet");
    if (step.selector == Selector::only) {
      if (pts.size() != 1) throw DomainError("two intersections; selector 'first' or 'second' is required");
      s.add(a[0], AnyPoint{pts[0]});
    } else {
      if (pts.size() != 2) throw DomainError("single intersection; selector must be 'only'");
      s.add(a[0], AnyPoint{pts[step.selector == Selector::first ? 0 : 1]});
    }
    return;
  }

  if (op == "perpendicular_drop") {
    expect_args(step, 4);
    expect_selector(step, {Selector::none});
    const Geodesic g = s.line(a[3]).geodesic;
    const AnyPoint p = s.point(a[2]);
    const disk::Perpendicular perp = std::visit([&](const auto& q) { return disk::perpendicular(q, g); }, p);
    s.add(a[0], LineObject{perp.line, LineKind::line, p, AnyPoint{perp.foot}});
    s.add(a[1], AnyPoint{perp.foot});
    return;
  }

  if (op == "perpendicular_erect") {
    expect_args(step, 3);
    expect_selector(step, {Selector::none});
    const DiskPoint p = s.interior_point(a[1]);
    const Geodesic g = s.line(a[2]).geodesic;
    if (disk::distance_to(p, g).value() > kOnLineTol) throw DomainError("'" + a[1] + "' does not lie on '" + a[2] + "'");
    const disk::Perpendicular perp = disk::perpendicular(p, g);
    s.add(a[0], LineObject{perp.line, LineKind::line, perp.line.start(), perp.line.end()});
    return;
  }

  if (op == "bisect_segment") {
    expect_args(step, 3);
    expect_selector(step, {Selector::none});
    const DiskPoint p = s.interior_point(a[1]), q = s.interior_point(a[2]);
    const double d = disk::dist(p, q).value();
    if (d <= 0.0) throw DomainError("segment has zero length");
    s.add(a[0], AnyPoint{disk::point_along(p, disk::tangent_direction(p, q), d / 2.0)});
    return;
  }

  if (op == "bisect_angle") {
    expect_args(step, 4);
    expect_selector(step, {Selector::none});
    const DiskPoint v = s.interior_point(a[1]);
    const Complex d1 = disk::tangent_direction(v, s.point(a[2]));
    const Complex d2 = disk::tangent_direction(v, s.point(a[3]));
    const Complex sum = d1 + d2;
    if (std::abs(sum) < 1e-12) throw DomainError("straight angle has no unique bisector side");
    s.add(a[0], ray_from(v, sum));
    return;
  }

  if (op == "transfer_angle") {
    expect_selector(step, {Selector::left, Selector::right});
    double angle = 0.0;
    std::size_t base = 0;
    if (a.size() == 6) {
      angle = disk::measure_angle(s.interior_point(a[1]), s.point(a[2]), s.point(a[3])).radians();
      base = 4;
    } else if (a.size() == 4) {
      angle = s.scalar(a[1], ParamKind::angle).value;
      base = 2;
    } else {
      throw DomainError("'transfer_angle' takes [out, V, Q, R, O, T] or [out, angle, O, T]");
    }
    const DiskPoint o = s.interior_point(a[base]);
    const Complex dir = disk::tangent_direction(o, s.point(a[base + 1]));
    s.add(a[0], ray_from(o, rotate(dir, angle, step.selector)));
    return;
  }

  if (op == "mark_ideal") {
    expect_args(step, 2);
    expect_selector(step, {Selector::start, Selector::end});
    const Geodesic& g = s.line(a[1]).geodesic;
    s.add(a[0], AnyPoint{step.selector == Selector::start ? g.start() : g.end()});
    return;
  }

  throw DomainError("unknown operation '" + op + "'");
}

}  // namespace

void apply_step(ConstructionState& state, const Step& step, std::size_t index) {
  try {
    execute(state, step);
  } catch (const ConstructionError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConstructionError(index, step.op + ": " + e.what());
  }
  state.log().steps.push_back(step);
}

// ------------------------------------------------------------- assertions

namespace {

struct Args {
  const ConstructionState& s;
  const std::vector<AssertArg>& a;

  const std::string& name(std::size_t i) const {
    if (i >= a.size()) throw DomainError("missing argument " + std::to_string(i + 1));
    const auto* n = std::get_if<std::string>(&a[i]);
    if (!n) throw DomainError("argument " + std::to_string(i + 1) + " must be an object name");
    return *n;
  }
  double number(std::size_t i) const {
    if (i >= a.size()) throw DomainError("missing argument " + std::to_string(i + 1));
    if (const auto* d = std::get_if<double>(&a[i])) return *d;
    const auto* sc = std::get_if<Scalar>(&s.at(std::get<std::string>(a[i])));
    if (!sc) throw DomainError("argument " + std::to_string(i + 1) + " must be a number or a length/angle");
    return sc->value;
  }
  DiskPoint p(std::size_t i) const { return s.interior_point(name(i)); }
  AnyPoint any(std::size_t i) const { return s.point(name(i)); }
  double angle(std::size_t v) const { return disk::measure_angle(p(v), any(v + 1), any(v + 2)).radians(); }
  double dist(std::size_t i) const { return disk::dist(p(i), p(i + 1)).value(); }
  void count(std::size_t n) const {
    if (a.size() != n) throw DomainError("expected " + std::to_string(n) + " arguments");
  }
  std::vector<DiskPoint> polygon(std::size_t from) const {
    if (a.size() < from + 3) throw DomainError("a polygon needs at least 3 vertices");
    std::vector<DiskPoint> out;
    for (std::size_t i = from; i < a.size(); ++i) out.push_back(p(i));
    return out;
  }
};

std::string describe(const Assertion& as) {
  std::ostringstream os;
  os.precision(10);
  os << as.predicate << "(";
  for (std::size_t i = 0; i < as.args.size(); ++i) {
    if (i) os << ", ";
    std::visit([&](const auto& v) { os << v; }, as.args[i]);
  }
  os << ")";
  return os.str();
}

double polygon_angle_sum(const std::vector<DiskPoint>& v) {
  const std::size_t n = v.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += disk::measure_angle(v[i], v[(i + n - 1) % n], v[(i + 1) % n]).radians();
  }
  return sum;
}

double defect_area(const std::vector<DiskPoint>& v) {
  return (static_cast<double>(v.size()) - 2.0) * pi - polygon_angle_sum(v);
}

double relative(double measured, double expected) {
  return std::abs(measured - expected) / std::max(std::abs(expected), 1e-300);
}

}  // namespace

AssertionResult evaluate(const ConstructionState& state, const Assertion& as) {
  AssertionResult r;
  r.label = describe(as);
  r.tol = as.tol;
  const Args x{state, as.args};
  bool rel = false;
  try {
    const std::string& p = as.predicate;
    if (p == "dist") {
      x.count(3);
      r.measured = x.dist(0);
      r.expected = x.number(2);
    } else if (p == "arc_ratio") {
      x.count(3);
      r.measured = std::exp(x.dist(0));
      r.expected = x.number(2);
    } else if (p == "angle") {
      x.count(4);
      r.measured = x.angle(0);
      r.expected = x.number(3);
    } else if (p == "angle_is_parallelism") {
      x.count(5);
      r.measured = x.angle(0);
      r.expected = angle_of_parallelism(Length(x.dist(3)), Curvature(1.0)).radians();
    } else if (p == "parallelism_of") {
      x.count(3);
      r.measured = angle_of_parallelism(Length(x.dist(0)), Curvature(1.0)).radians();
      r.expected = x.number(2);
    } else if (p == "same_ideal") {
      x.count(2);
      r.measured = disk::angular_gap(state.ideal_point(x.name(0)), state.ideal_point(x.name(1)));
      r.expected = 0.0;
    } else if (p == "concurrent") {
      x.count(3);
      const auto meet = disk::intersect(state.shape(x.name(0)), state.shape(x.name(1)));
      if (meet.size() != 1) throw DomainError("first two lines do not meet in one point");
      r.measured = disk::distance_to(meet[0], state.line(x.name(2)).geodesic).value();
      r.expected = 0.0;
    } else if (p == "on_curve") {
      x.count(2);
      const DiskPoint q = x.p(0);
      const Object& o = state.at(x.name(1));
      if (const auto* l = std::get_if<LineObject>(&o)) {
        r.measured = disk::distance_to(q, l->geodesic).value();
      } else if (const auto* c = std::get_if<disk::CurveObject>(&o)) {
        r.measured = std::visit(
            Overloaded{
                [&](const disk::HyperbolicCircle& h) { return std::abs(disk::dist(h.center, q).value() - h.radius); },
                [&](const disk::Horocycle& h) {
                  const auto e = std::get<disk::EuclideanCircle>(disk::realize(disk::CurveObject{h}));
                  return std::abs(std::abs(q.z() - e.center) - e.radius);
                },
                [&](const disk::Equidistant& e) {
                  return std::abs(disk::distance_to(q, e.base).value() - std::abs(e.offset));
                },
            },
            *c);
      } else {
        throw DomainError("'" + x.name(1) + "' is not a line or circle");
      }
      r.expected = 0.0;
    } else if (p == "equal_angles") {
      x.count(6);
      r.measured = x.angle(0);
      r.expected = x.angle(3);
    } else if (p == "coincide") {
      x.count(2);
      const AnyPoint u = x.any(0), v = x.any(1);
      if (std::holds_alternative<DiskPoint>(u) && std::holds_alternative<DiskPoint>(v)) {
        r.measured = disk::dist(std::get<DiskPoint>(u), std::get<DiskPoint>(v)).value();
      } else if (std::holds_alternative<IdealPoint>(u) && std::holds_alternative<IdealPoint>(v)) {
        r.measured = disk::angular_gap(std::get<IdealPoint>(u), std::get<IdealPoint>(v));
      } else {
        throw DomainError("cannot compare an interior point with an ideal point");
      }
      r.expected = 0.0;
    } else if (p == "corresponding") {
      x.count(4);
      const DiskPoint f = disk::corresponding_point(x.p(0), state.line(x.name(2)).geodesic, state.ideal_point(x.name(3)));
      r.measured = disk::dist(x.p(1), f).value();
      r.expected = 0.0;
    } else if (p == "polygon_angles") {
      const auto v = x.polygon(1);
      r.expected = x.number(0);
      const std::size_t n = v.size();
      for (std::size_t i = 0; i < n; ++i) {
        const double ang = disk::measure_angle(v[i], v[(i + n - 1) % n], v[(i + 1) % n]).radians();
        if (i == 0 || std::abs(ang - r.expected) > std::abs(r.measured - r.expected)) r.measured = ang;
      }
    } else if (p == "polygon_sides_equal") {
      const auto v = x.polygon(0);
      double lo = INFINITY, hi = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const double d = disk::dist(v[i], v[(i + 1) % v.size()]).value();
        lo = std::min(lo, d);
        hi = std::max(hi, d);
      }
      r.measured = hi - lo;
      r.expected = 0.0;
    } else if (p == "polygon_area") {
      r.measured = defect_area(x.polygon(1));
      r.expected = x.number(0);
    } else if (p == "polygon_area_circle") {
      r.measured = defect_area(x.polygon(2));
      r.expected = circle_area(Length(x.dist(0)), Curvature(1.0)).value();
      rel = true;
    } else if (p == "quadrature") {
      x.count(5);
      const double t = std::tan(x.angle(0));
      r.measured = pi * t * t;
      r.expected = circle_area(Length(x.dist(3)), Curvature(1.0)).value();
      rel = true;
    } else {
      throw DomainError("unknown predicate '" + p + "'");
    }
    r.residual = rel ? relative(r.measured, r.expected) : std::abs(r.measured - r.expected);
    r.passed = r.residual <= r.tol;
    if (rel) r.note = "relative";
  } catch (const std::exception& e) {
    r.passed = false;
    r.measured = r.residual = NAN;
    r.note = e.what();
  }
  return r;
}

bool Report::passed() const {
  return std::all_of(results.begin(), results.end(), [](const AssertionResult& r) { return r.passed; });
}

// ------------------------------------------------------------------- runs

namespace {

bool logged(const Script& log, const std::string& name) {
  for (const Param& p : log.params) {
    if (p.name == name) return true;
  }
  for (const Step& st : log.steps) {
    const std::size_t outputs = st.op == "perpendicular_drop" ? 2 : 1;
    for (std::size_t i = 0; i < outputs && i < st.args.size(); ++i) {
      if (st.args[i] == name) return true;
    }
  }
  return false;
}

bool compatible(const Object& o, ParamKind kind) {
  if (const auto* p = std::get_if<AnyPoint>(&o)) {
    return kind == (std::holds_alternative<DiskPoint>(*p) ? ParamKind::point : ParamKind::ideal);
  }
  if (const auto* sc = std::get_if<Scalar>(&o)) return sc->kind == kind;
  return false;
}

std::vector<double> value_of(const Object& o) {
  if (const auto* p = std::get_if<AnyPoint>(&o)) {
    if (const auto* d = std::get_if<DiskPoint>(p)) return {d->u(), d->v()};
    return {std::get<IdealPoint>(*p).theta()};
  }
  return {std::get<Scalar>(o).value};
}

}  // namespace

RunResult run(const Script& script, const ConstructionState& seed) {
  RunResult out{seed, {}};
  ConstructionState& s = out.state;
  Script& log = s.log();
  if (log.name.empty()) log.name = script.name;
  for (const Param& param : script.params) {
    if (s.contains(param.name)) {
      if (!compatible(s.at(param.name), param.kind)) {
        throw ConstructionError(0, "seed object '" + param.name + "' is not a " + to_string(param.kind));
      }
      if (!logged(log, param.name)) {
        Param used = param;
        used.value = value_of(s.at(param.name));
        log.params.push_back(std::move(used));
      }
      continue;
    }
    if (param.value.empty()) throw ConstructionError(0, "parameter '" + param.name + "' has no value");
    try {
      seed_param(s, param);
    } catch (const std::exception& e) {
      throw ConstructionError(0, "parameter '" + param.name + "': " + e.what());
    }
    log.params.push_back(param);
  }
  for (std::size_t i = 0; i < script.steps.size(); ++i) apply_step(s, script.steps[i], i + 1);
  for (const std::string& name : script.outputs) {
    if (!s.contains(name)) {
      throw ConstructionError(script.steps.size(), "declared output '" + name + "' was never built");
    }
    log.outputs.push_back(name);
  }
  for (const Assertion& a : script.asserts) {
    log.asserts.push_back(a);
    out.report.results.push_back(evaluate(s, a));
  }
  return out;
}

ConstructionState replay(const ConstructionState& state) { return run(state.log()).state; }

}  // namespace hypkit
