#include "hypkit/disk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hypkit::disk {

namespace {

constexpr double pi = std::numbers::pi;
const Complex kI{0.0, 1.0};

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

Complex unit(Complex z) { return z / std::abs(z); }

// Closest point of g to the origin.
Complex nearest_to_origin(const Geodesic& g) {
  const Complex s = g.start().z() + g.end().z();
  if (g.is_diameter() || std::abs(s) == 0.0) return Complex{0.0, 0.0};
  const double gap = angular_gap(g.start(), g.end());
  return unit(s) * std::tan((pi - gap) / 4.0);
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

DiskPoint::DiskPoint(double u, double v) : DiskPoint(Complex{u, v}) {}

DiskPoint::DiskPoint(Complex z) : z_(z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("disk point must be finite");
  if (std::abs(z) > kMaxInteriorRadius) {
    throw DomainError("point lies on or outside the unit circle (|z| = " + std::to_string(std::abs(z)) + ")");
  }
}

IdealPoint::IdealPoint(double theta) {
  if (!std::isfinite(theta)) throw DomainError("ideal point angle must be finite");
  z_ = std::polar(1.0, theta);
  theta_ = std::arg(z_);
}

IdealPoint IdealPoint::from_direction(Complex z) {
  const double r = std::abs(z);
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("ideal point needs a non-zero finite direction");
  IdealPoint p(std::arg(z));
  p.z_ = z / r;
  return p;
}

Complex position(const AnyPoint& p) {
  return std::visit([](const auto& q) { return q.z(); }, p);
}

double angular_gap(const IdealPoint& a, const IdealPoint& b) { return std::abs(std::arg(b.z() * std::conj(a.z()))); }

Geodesic::Geodesic(IdealPoint start, IdealPoint end)
    : start_(start), end_(end), realization_(EuclideanLine{Complex{0.0, 0.0}, Complex{1.0, 0.0}}) {
  const double gap = angular_gap(start_, end_);
  if (gap < kCoincidenceTol) throw DomainError("geodesic ends coincide");
  const double radius = std::tan(gap / 2.0);
  if (!(radius < kMaxArcRadius)) {
    realization_ = EuclideanLine{Complex{0.0, 0.0}, unit(end_.z() - start_.z())};
  } else {
    // The centre lies on the bisector of the shorter arc, at sec(gap/2).
    const double signed_gap = std::arg(end_.z() * std::conj(start_.z()));
    const Complex mid = start_.z() * std::polar(1.0, signed_gap / 2.0);
    realization_ = EuclideanCircle{mid / std::cos(gap / 2.0), radius};
  }
}

// ---------------------------------------------------------------- isometries

Isometry::Isometry(Complex a, Complex b, bool reflecting) : a_(a), b_(b), reflecting_(reflecting) {
  const double n2 = std::norm(a_) - std::norm(b_);
  if (!(n2 > 0.0)) throw DomainError("degenerate disk isometry");
  const double n = std::sqrt(n2);
  a_ /= n;
  b_ /= n;
}

Isometry Isometry::identity() { return Isometry({1.0, 0.0}, {0.0, 0.0}, false); }

Isometry Isometry::reflection(const Geodesic& g) {
  return std::visit(Overloaded{
                        [](const EuclideanLine& l) {
                          // z -> d^2 conj(z)
                          return Isometry(l.direction, {0.0, 0.0}, true);
                        },
                        [](const EuclideanCircle& c) {
                          // inversion z -> c + r^2 / conj(z - c), using |c|^2 = r^2 + 1
                          return Isometry(kI * c.center / c.radius, -kI / c.radius, true);
                        },
                    },
                    g.realization());
}

Isometry Isometry::to_origin(const DiskPoint& p) { return Isometry({1.0, 0.0}, -p.z(), false); }

Isometry Isometry::rotation(const DiskPoint& center, double phi) {
  const Isometry t = to_origin(center);
  const Isometry spin(std::polar(1.0, phi / 2.0), {0.0, 0.0}, false);
  return t.inverse().compose(spin.compose(t));
}

Isometry Isometry::standardize(const Geodesic& g) {
  const Isometry t = Isometry({1.0, 0.0}, -nearest_to_origin(g), false);
  const Complex u = unit(t.apply(g.end().z()) - t.apply(g.start().z()));
  const Isometry spin(std::conj(std::sqrt(u)), {0.0, 0.0}, false);
  return spin.compose(t);
}

Isometry Isometry::translation(const Geodesic& g, double d) {
  const Isometry s = standardize(g);
  const Isometry shift({std::cosh(d / 2.0), 0.0}, {std::sinh(d / 2.0), 0.0}, false);
  return s.inverse().compose(shift.compose(s));
}

Complex Isometry::apply(Complex z) const {
  const Complex w = reflecting_ ? std::conj(z) : z;
  return (a_ * w + b_) / (std::conj(b_) * w + std::conj(a_));
}

DiskPoint Isometry::apply(const DiskPoint& p) const { return DiskPoint(apply(p.z())); }

IdealPoint Isometry::apply(const IdealPoint& p) const { return IdealPoint::from_direction(apply(p.z())); }

AnyPoint Isometry::apply(const AnyPoint& p) const {
  return std::visit([this](const auto& q) -> AnyPoint { return apply(q); }, p);
}

Geodesic Isometry::apply(const Geodesic& g) const { return Geodesic(apply(g.start()), apply(g.end())); }

CurveObject Isometry::apply(const CurveObject& c) const {
  return std::visit(Overloaded{
                        [this](const HyperbolicCircle& h) -> CurveObject {
                          return HyperbolicCircle{apply(h.center), h.radius};
                        },
                        [this](const Horocycle& h) -> CurveObject { return Horocycle{apply(h.omega), apply(h.through)}; },
                        [this](const Equidistant& e) -> CurveObject {
                          return Equidistant{apply(e.base), reflecting_ ? -e.offset : e.offset};
                        },
                    },
                    c);
}

Isometry Isometry::compose(const Isometry& inner) const {
  const Complex a2 = reflecting_ ? std::conj(inner.a_) : inner.a_;
  const Complex b2 = reflecting_ ? std::conj(inner.b_) : inner.b_;
  return Isometry(a_ * a2 + b_ * std::conj(b2), a_ * b2 + b_ * std::conj(a2), reflecting_ != inner.reflecting_);
}

Isometry Isometry::inverse() const {
  if (reflecting_) return Isometry(a_, -std::conj(b_), true);
  return Isometry(std::conj(a_), -b_, false);
}

// ------------------------------------------------------------------ metric

namespace {

// Ideal ends of the geodesic through a and m, the first beyond a.
std::pair<Complex, Complex> ends_through(const DiskPoint& a, const DiskPoint& m) {
  const Isometry t = Isometry::to_origin(a);
  const Isometry back = t.inverse();
  const Complex u = unit(t.apply(m.z()));
  return {back.apply(-u), back.apply(u)};
}

}  // namespace

Length dist(const DiskPoint& a, const DiskPoint& m) {
  if (a == m) return Length(0.0);
  const auto [x, p] = ends_through(a, m);
  const double ap = std::abs(a.z() - p);
  const double xm = std::abs(x - m.z());
  const double xa = std::abs(x - a.z());
  const double mp = std::abs(m.z() - p);
  return Length(std::max(0.0, std::log((ap * xm) / (xa * mp))));
}

Geodesic geodesic_through(const AnyPoint& a, const AnyPoint& b) {
  if (std::abs(position(a) - position(b)) < kCoincidenceTol) throw DomainError("coincident points span no geodesic");
  if (const auto* pa = std::get_if<DiskPoint>(&a)) {
    const Isometry t = Isometry::to_origin(*pa);
    const Isometry back = t.inverse();
    const Complex u = unit(t.apply(position(b)));
    const IdealPoint start = IdealPoint::from_direction(back.apply(-u));
    if (const auto* ib = std::get_if<IdealPoint>(&b)) return Geodesic(start, *ib);
    return Geodesic(start, IdealPoint::from_direction(back.apply(u)));
  }
  const IdealPoint& ia = std::get<IdealPoint>(a);
  if (const auto* pb = std::get_if<DiskPoint>(&b)) {
    const Isometry t = Isometry::to_origin(*pb);
    const Complex u = unit(t.apply(ia.z()));
    return Geodesic(ia, IdealPoint::from_direction(t.inverse().apply(-u)));
  }
  return Geodesic(ia, std::get<IdealPoint>(b));
}

// ------------------------------------------------------------ realization

EuclideanCircle circumcircle(Complex a, Complex b, Complex c) {
  const double d = 2.0 * (a.real() * (b.imag() - c.imag()) + b.real() * (c.imag() - a.imag()) +
                          c.real() * (a.imag() - b.imag()));
  if (std::abs(d) < 1e-300) throw DomainError("collinear points have no circumcircle");
  const double na = std::norm(a), nb = std::norm(b), nc = std::norm(c);
  const double ux = (na * (b.imag() - c.imag()) + nb * (c.imag() - a.imag()) + nc * (a.imag() - b.imag())) / d;
  const double uy = (na * (c.real() - b.real()) + nb * (a.real() - c.real()) + nc * (b.real() - a.real())) / d;
  const Complex center{ux, uy};
  return EuclideanCircle{center, std::abs(a - center)};
}

Realization realize(const CurveObject& curve) {
  return std::visit(
      Overloaded{
          [](const HyperbolicCircle& h) -> Realization {
            if (!(h.radius > 0.0) || !std::isfinite(h.radius)) throw DomainError("circle radius must be positive");
            const double t = std::tanh(h.radius / 2.0);
            if (std::abs(h.center.z()) == 0.0) return EuclideanCircle{h.center.z(), t};
            const Isometry back = Isometry::to_origin(h.center).inverse();
            const Complex u = unit(h.center.z());
            const Complex p1 = back.apply(t * u);
            const Complex p2 = back.apply(-t * u);
            return EuclideanCircle{(p1 + p2) / 2.0, std::abs(p1 - p2) / 2.0};
          },
          [](const Horocycle& h) -> Realization {
            const Complex q = h.through.z();
            const double s = (1.0 - std::norm(q)) / (2.0 * (1.0 - (q * std::conj(h.omega.z())).real()));
            return EuclideanCircle{s * h.omega.z(), 1.0 - s};
          },
          [](const Equidistant& e) -> Realization {
            if (e.offset == 0.0) return e.base.realization();
            const Complex q = Isometry::standardize(e.base).inverse().apply(kI * std::tanh(e.offset / 2.0));
            return circumcircle(e.base.start().z(), e.base.end().z(), q);
          },
      },
      curve);
}

Realization realize(const Shape& shape) {
  return std::visit(Overloaded{
                        [](const Geodesic& g) -> Realization { return g.realization(); },
                        [](const CurveObject& c) -> Realization { return realize(c); },
                    },
                    shape);
}

// ------------------------------------------------------------ intersection

namespace {

constexpr double kTangencyTol = 1e-13;

Complex anchor(const Realization& r) {
  return std::visit(Overloaded{
                        [](const EuclideanLine& l) { return l.point; },
                        [](const EuclideanCircle& c) { return c.center; },
                    },
                    r);
}

std::vector<Complex> meet(const EuclideanLine& l1, const EuclideanLine& l2) {
  const double den = cross(l1.direction, l2.direction);
  if (std::abs(den) < 1e-15) {
    if (std::abs(cross(l1.direction, l2.point - l1.point)) < kCoincidenceTol) throw DomainError("identical objects");
    return {};
  }
  const double t = cross(l2.point - l1.point, l2.direction) / den;
  return {l1.point + t * l1.direction};
}

std::vector<Complex> meet(const EuclideanLine& l, const EuclideanCircle& c) {
  // |p + t d - c|^2 = r^2
  const Complex w = l.point - c.center;
  const double b = (w * std::conj(l.direction)).real();
  const double cc = std::norm(w) - c.radius * c.radius;
  const double disc = b * b - cc;
  const double scale = std::max(1.0, c.radius * c.radius);
  if (disc < -kTangencyTol * scale) return {};
  if (disc <= kTangencyTol * scale) return {l.point - b * l.direction};
  const double root = std::sqrt(disc);
  // Stable pair of roots of t^2 + 2 b t + cc = 0.
  const double q = -b - std::copysign(root, b);
  const double t1 = q;
  const double t2 = (q != 0.0) ? cc / q : -b + root;
  return {l.point + t1 * l.direction, l.point + t2 * l.direction};
}

std::vector<Complex> meet(const EuclideanCircle& c1, const EuclideanCircle& c2) {
  const Complex delta = c2.center - c1.center;
  const double d = std::abs(delta);
  if (d < kCoincidenceTol) {
    if (std::abs(c1.radius - c2.radius) < kCoincidenceTol) throw DomainError("identical objects");
    return {};
  }
  const double along = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d);
  const double h2 = c1.radius * c1.radius - along * along;
  const double scale = std::max(1.0, c1.radius * c1.radius);
  const Complex e = delta / d;
  const Complex base = c1.center + along * e;
  if (h2 < -kTangencyTol * scale) return {};
  if (h2 <= kTangencyTol * scale) return {base};
  const double h = std::sqrt(h2);
  return {base + h * kI * e, base - h * kI * e};
}

std::vector<Complex> meet(const Realization& a, const Realization& b) {
  return std::visit(Overloaded{
                        [](const EuclideanLine& x, const EuclideanLine& y) { return meet(x, y); },
                        [](const EuclideanLine& x, const EuclideanCircle& y) { return meet(x, y); },
                        [](const EuclideanCircle& x, const EuclideanLine& y) { return meet(y, x); },
                        [](const EuclideanCircle& x, const EuclideanCircle& y) { return meet(x, y); },
                    },
                    a, b);
}

// Position of ideal point x measured counter-clockwise from `from`, in [0, 2 pi).
double ccw_from(const IdealPoint& from, const IdealPoint& x) {
  double t = std::arg(x.z() * std::conj(from.z()));
  if (t < 0.0) t += 2.0 * pi;
  return t;
}

std::vector<Complex> meet_geodesics(const Geodesic& g, const Geodesic& h) {
  const double s = angular_gap(g.start(), h.start()), e = angular_gap(g.end(), h.end());
  const double se = angular_gap(g.start(), h.end()), es = angular_gap(g.end(), h.start());
  if ((s < kCoincidenceTol && e < kCoincidenceTol) || (se < kCoincidenceTol && es < kCoincidenceTol)) {
    throw DomainError("identical objects");
  }
  // A shared end means asymptotic parallels: no interior point.
  if (std::min({s, e, se, es}) < kCoincidenceTol) return {};
  const double end = ccw_from(g.start(), g.end());
  const bool first_inside = ccw_from(g.start(), h.start()) < end;
  const bool second_inside = ccw_from(g.start(), h.end()) < end;
  if (first_inside == second_inside) return {};
  // Geodesics are straight chords in the Klein model. With g on the real
  // diameter, h's chord crosses it at x, and z = x / (1 + sqrt(1 - x^2)).
  const Isometry std_map = Isometry::standardize(g);
  const Complex c = std_map.apply(h.start().z()), d = std_map.apply(h.end().z());
  const double x = c.real() - c.imag() * (d.real() - c.real()) / (d.imag() - c.imag());
  const double z = x / (1.0 + std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x))));
  return {std_map.inverse().apply(Complex{z, 0.0})};
}

// Intersections of a geodesic with a curve, computed where the geodesic is
// the real diameter.
std::vector<Complex> meet_geodesic_curve(const Geodesic& g, const CurveObject& curve) {
  const Isometry s = Isometry::standardize(g);
  const Isometry back = s.inverse();
  const EuclideanLine axis{Complex{0.0, 0.0}, Complex{1.0, 0.0}};
  std::vector<Complex> pts = meet(Realization{axis}, realize(s.apply(curve)));
  for (Complex& z : pts) z = back.apply(Complex{z.real(), 0.0});
  return pts;
}

}  // namespace

std::vector<DiskPoint> intersect(const Shape& a, const Shape& b) {
  const Realization ra = realize(a);
  const Realization rb = realize(b);

  std::vector<Complex> raw;
  const auto* ga = std::get_if<Geodesic>(&a);
  const auto* gb = std::get_if<Geodesic>(&b);
  if (ga && gb) {
    raw = meet_geodesics(*ga, *gb);
  } else if (ga) {
    raw = meet_geodesic_curve(*ga, std::get<CurveObject>(b));
  } else if (gb) {
    raw = meet_geodesic_curve(*gb, std::get<CurveObject>(a));
  } else {
    raw = meet(ra, rb);
  }

  std::vector<DiskPoint> out;
  for (Complex z : raw) {
    if (std::abs(z) < kMaxInteriorRadius) out.emplace_back(z);
  }
  if (out.size() == 2) {
    const Complex ca = anchor(ra);
    Complex ref = anchor(rb) - ca;
    if (std::abs(ref) < kCoincidenceTol) {
      if (const auto* l = std::get_if<EuclideanLine>(&ra)) {
        ref = l->direction;
      } else if (const auto* l2 = std::get_if<EuclideanLine>(&rb)) {
        ref = l2->direction;
      } else {
        ref = Complex{1.0, 0.0};
      }
    }
    if (cross(ref, out[0].z() - ca) < cross(ref, out[1].z() - ca)) std::swap(out[0], out[1]);
  }
  return out;
}

// ------------------------------------------------------- perpendiculars etc.

Perpendicular perpendicular(const DiskPoint& p, const Geodesic& g) {
  const Isometry t = Isometry::to_origin(p);
  const Isometry back = t.inverse();
  const Geodesic local = t.apply(g);
  const Complex x = local.start().z(), y = local.end().z();
  const Complex s = x + y;
  const double gap = angular_gap(local.start(), local.end());
  const double near = std::tan((pi - gap) / 4.0);

  Complex dir = kI * unit(y - x);
  if (near < 1e-13) {
    if (std::abs(s) > 0.0 && (dir * std::conj(s)).real() < 0.0) dir = -dir;
    return Perpendicular{p, Geodesic(back.apply(IdealPoint::from_direction(-dir)), back.apply(IdealPoint::from_direction(dir)))};
  }
  dir = unit(s);
  return Perpendicular{DiskPoint(back.apply(dir * near)),
                       Geodesic(back.apply(IdealPoint::from_direction(-dir)), back.apply(IdealPoint::from_direction(dir)))};
}

Perpendicular perpendicular(const IdealPoint& omega, const Geodesic& g) {
  if (angular_gap(omega, g.start()) < kCoincidenceTol || angular_gap(omega, g.end()) < kCoincidenceTol) {
    throw DomainError("an end of the line has no perpendicular to it");
  }
  const IdealPoint mirror = Isometry::reflection(g).apply(omega);
  const Geodesic line(omega, mirror);
  const std::vector<DiskPoint> foot = intersect(Shape{line}, Shape{g});
  if (foot.size() != 1) throw DomainError("perpendicular from an ideal point did not meet the line");
  return Perpendicular{foot.front(), line};
}

Complex tangent_direction(const DiskPoint& p, const AnyPoint& q) {
  const Complex w = Isometry::to_origin(p).apply(position(q));
  if (std::abs(w) < 1e-300) throw DomainError("degenerate ray: target coincides with its origin");
  return unit(w);
}

DiskPoint point_along(const DiskPoint& p, Complex dir, double d) {
  return DiskPoint(Isometry::to_origin(p).inverse().apply(unit(dir) * std::tanh(d / 2.0)));
}

IdealPoint ideal_along(const DiskPoint& p, Complex dir) {
  return IdealPoint::from_direction(Isometry::to_origin(p).inverse().apply(unit(dir)));
}

Angle measure_angle(const DiskPoint& p, const AnyPoint& q, const AnyPoint& r) {
  const Complex d1 = tangent_direction(p, q);
  const Complex d2 = tangent_direction(p, r);
  return Angle(std::abs(std::arg(d2 * std::conj(d1))));
}

Length distance_to(const DiskPoint& p, const Geodesic& g) {
  const Geodesic local = Isometry::to_origin(p).apply(g);
  const double near = std::tan((pi - angular_gap(local.start(), local.end())) / 4.0);
  return Length(2.0 * std::atanh(std::max(0.0, near)));
}

DiskPoint corresponding_point(const DiskPoint& b, const Geodesic& a, const IdealPoint& omega) {
  Geodesic toward = a;
  if (angular_gap(omega, a.end()) < kCoincidenceTol) {
    toward = a;
  } else if (angular_gap(omega, a.start()) < kCoincidenceTol) {
    toward = a.reversed();
  } else {
    throw DomainError("omega must be an ideal end of the line");
  }
  // With the line on the real diameter and omega at 1, the horocycle at 1
  // through b is the circle of centre s and radius 1 - s; it meets the
  // diameter again at 2s - 1.
  const Isometry std_map = Isometry::standardize(toward);
  const Complex q = std_map.apply(b.z());
  const double s = (1.0 - std::norm(q)) / (2.0 * (1.0 - q.real()));
  return DiskPoint(std_map.inverse().apply(Complex{2.0 * s - 1.0, 0.0}));
}

Angle angle_of_parallelism_numeric(const DiskPoint& p, const Geodesic& g) {
  const Perpendicular perp = perpendicular(p, g);
  if (std::abs(perp.foot.z() - p.z()) < kCoincidenceTol) throw DomainError("point lies on the line");
  const double ds = std::abs(g.start().z() - p.z());
  const double de = std::abs(g.end().z() - p.z());
  const IdealPoint nearer = ds <= de ? g.start() : g.end();
  return measure_angle(p, perp.foot, nearer);
}

}  // namespace hypkit::disk
