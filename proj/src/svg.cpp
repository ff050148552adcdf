#include "hypkit/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hypkit {

using disk::Complex;

namespace {

constexpr double kHalf = kSvgSize / 2.0;
constexpr double kMarkRadius = 0.04;

struct Writer {
  std::ostringstream out;

  static std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
  }
  static std::string sx(Complex z) { return num(kHalf + kHalf * z.real()); }
  static std::string sy(Complex z) { return num(kHalf - kHalf * z.imag()); }

  static std::string escape(const std::string& s) {
    std::string r;
    for (char c : s) {
      switch (c) {
        case '&': r += "&amp;"; break;
        case '<': r += "&lt;"; break;
        case '>': r += "&gt;"; break;
        case '"': r += "&quot;"; break;
        case '\'': r += "&apos;"; break;
        default: r += c;
      }
    }
    return r;
  }

  static std::string id(const std::string& name) { return name.empty() ? "" : " id=\"" + escape(name) + "\""; }

  void segment(const std::string& name, Complex a, Complex b, const char* style) {
    out << "  <line" << id(name) << " x1=\"" << sx(a) << "\" y1=\"" << sy(a) << "\" x2=\"" << sx(b) << "\" y2=\""
        << sy(b) << "\" " << style << "/>\n";
  }

  // Arc of the circle (c, r) from a to b passing through q.
  void arc(const std::string& name, Complex a, Complex b, Complex q, Complex c, double r, const char* style) {
    const auto cross = [](Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); };
    // Screen y points down, which flips every orientation test.
    const bool same_side = cross(b - a, c - a) * cross(b - a, q - a) > 0.0;
    const bool sweep = -cross(b - a, q - a) < 0.0;
    out << "  <path" << id(name) << " d=\"M " << sx(a) << " " << sy(a) << " A " << num(kHalf * r) << " "
        << num(kHalf * r) << " 0 " << (same_side ? 1 : 0) << " " << (sweep ? 1 : 0) << " " << sx(b) << " " << sy(b)
        << "\" fill=\"none\" " << style << "/>\n";
  }

  void circle(const std::string& name, Complex c, double r, const char* style) {
    out << "  <circle" << id(name) << " cx=\"" << sx(c) << "\" cy=\"" << sy(c) << "\" r=\"" << num(kHalf * r) << "\" "
        << style << "/>\n";
  }
};

constexpr const char* kGeodesicStyle = "stroke=\"blue\" stroke-width=\"2\"";
constexpr const char* kCircleStyle = "fill=\"none\" stroke=\"red\" stroke-width=\"1.5\"";
constexpr const char* kHorocycleStyle = "fill=\"none\" stroke=\"green\" stroke-width=\"1.5\"";
constexpr const char* kEquidistantStyle = "fill=\"none\" stroke=\"orange\" stroke-width=\"1.5\"";

Complex unit(Complex z) { return z / std::abs(z); }

// Part of the geodesic between positions a and b (either may be ideal).
void draw_line(Writer& w, const std::string& name, const LineObject& l) {
  Complex a, b;
  if (l.kind == LineKind::line) {
    a = l.geodesic.start().z();
    b = l.geodesic.end().z();
  } else {
    a = disk::position(l.from);
    b = disk::position(l.to);
  }
  if (const auto* c = std::get_if<disk::EuclideanCircle>(&l.geodesic.realization())) {
    const Complex q = c->center + c->radius * unit((a + b) / 2.0 - c->center);
    w.arc(name, a, b, q, c->center, c->radius, kGeodesicStyle);
  } else {
    w.segment(name, a, b, kGeodesicStyle);
  }
}

// Equidistant curves are clipped to the open disk.
void draw_clipped(Writer& w, const std::string& name, const disk::Realization& r) {
  if (const auto* line = std::get_if<disk::EuclideanLine>(&r)) {
    const Complex d = line->direction;
    const double t0 = -std::real(line->point * std::conj(d));
    const double h2 = 1.0 - std::norm(line->point + t0 * d);
    const double h = std::sqrt(std::max(h2, 0.0));
    w.segment(name, line->point + (t0 - h) * d, line->point + (t0 + h) * d, kEquidistantStyle);
    return;
  }
  const auto& c = std::get<disk::EuclideanCircle>(r);
  const double dc = std::abs(c.center);
  const double x = (dc * dc + 1.0 - c.radius * c.radius) / (2.0 * dc);
  const double y = std::sqrt(std::max(1.0 - x * x, 0.0));
  const Complex u = unit(c.center);
  const Complex e1 = u * Complex(x, y), e2 = u * Complex(x, -y);
  Complex q = c.center + c.radius * unit((e1 + e2) / 2.0 - c.center);
  if (std::abs(q) >= 1.0) q = c.center - c.radius * unit((e1 + e2) / 2.0 - c.center);
  w.arc(name, e1, e2, q, c.center, c.radius, kEquidistantStyle);
}

void draw_curve(Writer& w, const std::string& name, const disk::CurveObject& curve) {
  const disk::Realization r = disk::realize(curve);
  if (std::holds_alternative<disk::Equidistant>(curve)) {
    draw_clipped(w, name, r);
    return;
  }
  const auto& c = std::get<disk::EuclideanCircle>(r);
  w.circle(name, c.center, c.radius,
           std::holds_alternative<disk::Horocycle>(curve) ? kHorocycleStyle : kCircleStyle);
}

void draw_point(Writer& w, const std::string& name, const disk::AnyPoint& p) {
  const Complex z = disk::position(p);
  const bool ideal = std::holds_alternative<disk::IdealPoint>(p);
  w.circle(name, z, ideal ? 0.008 : 0.006,
           ideal ? "fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"" : "fill=\"black\"");
  const Complex label = z + Complex(0.012, 0.012);
  w.out << "  <text x=\"" << Writer::sx(label) << "\" y=\"" << Writer::sy(label)
        << "\" font-family=\"sans-serif\" font-size=\"14\">" << Writer::escape(name) << "</text>\n";
}

void draw_angle_mark(Writer& w, const ConstructionState& s, const std::string& v, const std::string& q,
                     const std::string& r) {
  const disk::DiskPoint vp = s.interior_point(v);
  const Complex d1 = disk::tangent_direction(vp, s.point(q));
  const Complex d2 = disk::tangent_direction(vp, s.point(r));
  const Complex a = vp.z() + kMarkRadius * d1, b = vp.z() + kMarkRadius * d2;
  const Complex bis = d1 + d2;
  const Complex mid = vp.z() + kMarkRadius * (std::abs(bis) > 1e-12 ? unit(bis) : d1 * Complex(0.0, 1.0));
  w.arc("", a, b, mid, vp.z(), kMarkRadius, "stroke=\"black\" stroke-width=\"1\"");
}

}  // namespace

std::string render_svg(const ConstructionState& state) {
  Writer w;
  w.out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" "
           "viewBox=\"0 0 1000 1000\">\n";
  w.circle("", 0.0, 1.0, "fill=\"none\" stroke=\"black\" stroke-width=\"2\"");

  for (const auto& [name, obj] : state.objects()) {
    if (const auto* l = std::get_if<LineObject>(&obj)) draw_line(w, name, *l);
  }
  for (const auto& [name, obj] : state.objects()) {
    if (const auto* c = std::get_if<disk::CurveObject>(&obj)) draw_curve(w, name, *c);
  }
  for (const Assertion& a : state.log().asserts) {
    if (a.predicate != "angle" && a.predicate != "angle_is_parallelism") continue;
    try {
      draw_angle_mark(w, state, std::get<std::string>(a.args.at(0)), std::get<std::string>(a.args.at(1)),
                      std::get<std::string>(a.args.at(2)));
    } catch (const std::exception&) {
      // Marks are decoration; a malformed assertion is reported by the run.
    }
  }
  for (const auto& [name, obj] : state.objects()) {
    if (const auto* p = std::get_if<disk::AnyPoint>(&obj)) draw_point(w, name, *p);
  }
  w.out << "</svg>\n";
  return w.out.str();
}

}  // namespace hypkit
