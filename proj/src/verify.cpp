#include "hypkit/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "hypkit/constructions.hpp"
#include "hypkit/core_trig.hpp"
#include "hypkit/error.hpp"
#include "hypkit/quadrature.hpp"
#include "hypkit/triangles.hpp"

namespace hypkit::verify {

using disk::Complex;
using disk::DiskPoint;
using disk::Geodesic;
using disk::IdealPoint;

namespace {

constexpr double pi = std::numbers::pi;

// 20-point Gauss-Legendre nodes and weights on [-1, 1] (positive half).
constexpr std::array<double, 10> kNodes = {
    0.0765265211334973337546404, 0.2277858511416450780804962, 0.3737060887154195606725482,
    0.5108670019508270980043641, 0.6360536807265150254528367, 0.7463319064601507926143051,
    0.8391169718222188233945291, 0.9122344282513259058677524, 0.9639719272779137912676661,
    0.9931285991850949247861224};
constexpr std::array<double, 10> kWeights = {
    0.1527533871307258506980843, 0.1491729864726037467878287, 0.1420961093183820513292983,
    0.1316886384491766268984945, 0.1181945319615184173123774, 0.1019301198172404350367501,
    0.0832767415767047487247581, 0.0626720483341090635695065, 0.0406014298003869413310400,
    0.0176140071391521183118620};

double gauss_legendre(const std::function<double(double)>& f, double lo, double hi) {
  const double mid = (lo + hi) / 2.0, half = (hi - lo) / 2.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < kNodes.size(); ++i) {
    sum += kWeights[i] * (f(mid - half * kNodes[i]) + f(mid + half * kNodes[i]));
  }
  return sum * half;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  DiskPoint point(double r_max) {
    return DiskPoint(std::polar(r_max * std::sqrt(uniform(0.0, 1.0)), uniform(-pi, pi)));
  }
  Geodesic geodesic() {
    for (;;) {
      const IdealPoint a(uniform(-pi, pi)), b(uniform(-pi, pi));
      if (disk::angular_gap(a, b) > 1e-2) return Geodesic(a, b);
    }
  }

 private:
  std::mt19937_64 gen_;
};

double rel(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

struct Accumulator {
  Check check;
  Accumulator(std::string suite, std::string property, double tol) {
    check.suite = std::move(suite);
    check.property = std::move(property);
    check.tol = tol;
  }
  void add(double residual) {
    ++check.samples;
    if (!(residual <= check.max_residual)) check.max_residual = std::isnan(residual) ? INFINITY : residual;
  }
  Check done(std::string note = {}) {
    check.passed = check.samples > 0 && check.max_residual <= check.tol;
    check.note = std::move(note);
    return check;
  }
};

// ---------------------------------------------------------------- identities

std::vector<Check> identities(const Options& o) {
  Rng rng(o.seed);
  const Curvature k = o.k;
  const double kv = k.value();
  Accumulator cot("identities", "tan(Pi(y)/2) e^(y/k) = 1", 1e-12);
  Accumulator sin_cosh("identities", "sin Pi(y) cosh(y/k) = 1", 1e-12);
  Accumulator inverse("identities", "parallelism_segment(Pi(y)) = y (relative)", 1e-10);
  Accumulator ratio("identities", "X(y) / X(x) = X(y - x)", 1e-12);
  for (int i = 0; i < 10000; ++i) {
    const double y = rng.uniform(0.0, 20.0) * kv;
    const double u = angle_of_parallelism(Length(y), k).radians();
    cot.add(std::abs(std::tan(u / 2.0) * std::exp(y / kv) - 1.0));
    sin_cosh.add(std::abs(std::sin(u) * std::cosh(y / kv) - 1.0));
    if (y > 1e-3 * kv) inverse.add(rel(parallelism_segment(Angle(u), k).value(), y));
    const double x = rng.uniform(0.0, y);
    ratio.add(rel(arc_ratio(Length(y), k).value() / arc_ratio(Length(x), k).value(),
                  arc_ratio(Length(y - x), k).value()));
  }

  Accumulator d_circle("identities", "d(circle area)/dr = circumference", 1e-6);
  Accumulator d_sphere("identities", "d(sphere volume)/dx = sphere surface", 1e-6);
  Accumulator d_strip("identities", "d(equidistant area)/dq = equidistant arc", 1e-6);
  Accumulator d_horo("identities", "d(horocyclic strip area)/dx = r e^(-x/k)", 1e-6);
  for (int i = 0; i < 100; ++i) {
    const double r = rng.uniform(0.1, 5.0) * kv;
    const double h = 1e-6 * kv;
    const auto fd = [&](const std::function<double(double)>& f) { return (f(r + h) - f(r - h)) / (2.0 * h); };
    d_circle.add(rel(fd([&](double x) { return circle_area(Length(x), k).value(); }),
                     circle_circumference(Length(r), k).value()));
    d_sphere.add(rel(fd([&](double x) { return sphere_measures(Length(x), k).volume; }),
                     sphere_measures(Length(r), k).surface));
    const double p = rng.uniform(0.1, 3.0);
    d_strip.add(rel(fd([&](double q) { return equidistant_region_measures(Length(p), Length(q), k).area; }),
                    equidistant_arc_length(Length(p), Length(r), k).value()));
    d_horo.add(rel(fd([&](double x) { return horocycle_sector_area(Length(p), Length(x), k).value(); }),
                   p * std::exp(-r / kv)));
  }

  Accumulator right("identities", "right-triangle relations on solved triangles", 1e-10);
  Accumulator general("identities", "law of cosines on solved SSS triangles", 1e-10);
  for (int i = 0; i < 1000; ++i) {
    const double a = rng.uniform(0.05, 4.0) * kv, b = rng.uniform(0.05, 4.0) * kv;
    right.add(right_triangle_residuals(solve_right_triangle({.a = Length(a), .b = Length(b)}, k)).max());
    const double c = rng.uniform(std::abs(a - b) + 1e-3 * kv, a + b - 1e-3 * kv);
    general.add(
        general_triangle_residuals(solve_general_triangle({.a = Length(a), .b = Length(b), .c = Length(c)}, k)).max());
  }
  return {cot.done(), sin_cosh.done(), inverse.done(), ratio.done(), d_circle.done(), d_sphere.done(),
          d_strip.done(), d_horo.done(), right.done(), general.done()};
}

// -------------------------------------------------------------------- oracle

std::vector<Check> oracle(const Options& o) {
  Rng rng(o.seed);
  const Curvature k1(1.0);
  Accumulator origin("oracle", "dist(0, t) = log((1 + t) / (1 - t))", 1e-12);
  Accumulator additivity("oracle", "dist(A, M) = dist(A, D) + dist(D, M) on a geodesic", 1e-12);
  for (int i = 0; i < 1000; ++i) {
    const double t = rng.uniform(0.0, 0.99);
    origin.add(std::abs(disk::dist(DiskPoint(0.0, 0.0), DiskPoint(t, 0.0)).value() - std::log((1.0 + t) / (1.0 - t))));
    const DiskPoint a = rng.point(0.8);
    const Complex dir = std::polar(1.0, rng.uniform(-pi, pi));
    const double s1 = rng.uniform(0.0, 1.5), s2 = rng.uniform(0.0, 1.5);
    const DiskPoint d = disk::point_along(a, dir, s1), m = disk::point_along(a, dir, s1 + s2);
    additivity.add(std::abs(disk::dist(a, m).value() - disk::dist(a, d).value() - disk::dist(d, m).value()));
  }

  Accumulator solver("oracle", "solve_right_triangle(a, b) reproduces measured c, alpha, beta", 1e-9);
  Accumulator residuals("oracle", "right-triangle relations on measured elements", 1e-10);
  while (solver.check.samples < 1000) {
    const Geodesic g = rng.geodesic();
    const DiskPoint a = rng.point(0.85);
    if (disk::distance_to(a, g).value() < 0.05) continue;
    const DiskPoint c = disk::perpendicular(a, g).foot;
    const Complex along = disk::tangent_direction(c, g.end());
    const DiskPoint b = disk::point_along(c, along, rng.uniform(0.05, 2.5));
    const double la = disk::dist(b, c).value(), lb = disk::dist(a, c).value(), lc = disk::dist(a, b).value();
    const double alpha = disk::measure_angle(a, b, c).radians(), beta = disk::measure_angle(b, a, c).radians();
    const RightTriangle t = solve_right_triangle({.a = Length(la), .b = Length(lb)}, k1);
    solver.add(std::max({std::abs(t.c.value() - lc) / std::max(1.0, lc), std::abs(t.alpha.radians() - alpha),
                         std::abs(t.beta.radians() - beta)}));
    residuals.add(right_triangle_residuals(
                      RightTriangle{Length(la), Length(lb), Length(lc), Angle(alpha), Angle(beta), k1})
                      .max());
  }

  Accumulator parallel("oracle", "disk angle of parallelism = Pi(distance)", 1e-9);
  while (parallel.check.samples < 1000) {
    const Geodesic g = rng.geodesic();
    const DiskPoint p = rng.point(0.9);
    const double d = disk::distance_to(p, g).value();
    if (d < 1e-3) continue;
    parallel.add(std::abs(disk::angle_of_parallelism_numeric(p, g).radians() -
                          angle_of_parallelism(Length(d), k1).radians()));
  }

  Accumulator area("oracle", "defect area = integrated area (relative)", 1e-6);
  while (area.check.samples < 200) {
    const DiskPoint a = rng.point(0.9), b = rng.point(0.9), c = rng.point(0.9);
    const std::array<Angle, 3> angles{disk::measure_angle(a, b, c), disk::measure_angle(b, c, a),
                                      disk::measure_angle(c, a, b)};
    const double defect = polygon_area_from_angles(angles, k1).value();
    if (defect < 1e-3) continue;
    area.add(rel(integrate_triangle_area(a, b, c), defect));
  }
  return {origin.done(), additivity.done(), solver.done(), residuals.done(), parallel.done(), area.done()};
}

// -------------------------------------------------------------------- limits

std::vector<Check> limits(const Options&) {
  const std::vector<double> ratios{1e2, 1e3, 1e4};
  const std::vector<LimitRow> rows = limit_table(ratios);
  std::vector<Check> out;
  const auto order = [&](const char* name, double LimitRow::*field) {
    std::vector<double> residuals;
    for (const LimitRow& r : rows) residuals.push_back(r.*field);
    Check c;
    c.suite = "limits";
    c.property = std::string("order of ") + name + " residual in r/k";
    c.samples = rows.size();
    const double p = fitted_order(ratios, residuals);
    c.max_residual = std::abs(p - 2.0);
    c.tol = 0.1;
    c.passed = c.max_residual <= c.tol;
    c.note = "fitted exponent " + std::to_string(p);
    out.push_back(c);
  };
  order("circumference", &LimitRow::circumference);
  order("area", &LimitRow::area);
  order("volume", &LimitRow::volume);
  order("angle sum", &LimitRow::angle_sum);
  return out;
}

// ------------------------------------------------------------- constructions

std::vector<Check> constructions(const Options& o) {
  Rng rng(o.seed);
  Accumulator end("constructions", "parallel shares the line's ideal end", 1e-9);
  Accumulator angle("constructions", "parallel angle BDM = Pi(DB)", 1e-9);
  Accumulator asserts("constructions", "recorded assertions of random parallels", 0.0);
  for (int i = 0; i < 100; ++i) {
    const Geodesic g = rng.geodesic();
    const DiskPoint d = rng.point(0.8);
    if (disk::distance_to(d, g).value() < 1e-3) continue;
    const ParallelConstruction p = construct_parallel(g, d);
    end.add(p.endpoint_gap);
    angle.add(std::abs(p.angle - angle_of_parallelism(Length(p.distance), Curvature(1.0)).radians()));
    asserts.add(p.run.report.passed() ? 0.0 : 1.0);
  }

  Accumulator segment("constructions", "Pi(AL) = phi for the parallelism segment", 1e-9);
  for (int i = 0; i < 10; ++i) {
    const double phi = rng.uniform(0.1, 1.5);
    const SegmentConstruction s = construct_parallelism_segment(Angle(phi));
    segment.add(std::abs(angle_of_parallelism(Length(s.length), Curvature(1.0)).radians() - phi));
  }

  Accumulator ratio("constructions", "ratio distance AJ = ln 2", 1e-9);
  ratio.add(std::abs(construct_ratio_distance().distance - std::log(2.0)));

  Accumulator square("constructions", "square area = circle area (relative)", 1e-8);
  Accumulator hexagon("constructions", "hexagon area = 3 pi (relative)", 1e-8);
  const QuadratureConstruction sq = construct_quadrature(Rational(1));
  square.add(rel(sq.polygon_area, sq.circle_area));
  const QuadratureConstruction hx = construct_quadrature(Rational(3));
  hexagon.add(rel(hx.polygon_area, 3.0 * pi));

  Accumulator golden("constructions", "golden scripts pass and replay identically", 0.0);
  for (const auto& [file, script] : golden_scripts()) {
    const Construction a = execute(script), b = execute(script);
    bool same = a.state.objects().size() == b.state.objects().size();
    for (std::size_t i = 0; same && i < a.state.objects().size(); ++i) {
      const auto* p = std::get_if<disk::AnyPoint>(&a.state.objects()[i].second);
      const auto* q = std::get_if<disk::AnyPoint>(&b.state.objects()[i].second);
      if (p && q) same = disk::position(*p) == disk::position(*q);
    }
    golden.add(same && a.report.passed() ? 0.0 : 1.0);
  }
  return {end.done(), angle.done(), asserts.done(), segment.done(), ratio.done(), square.done(), hexagon.done(),
          golden.done()};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "oracle", "limits", "constructions"};
  return names;
}

std::vector<Check> run_suite(const std::string& name, const Options& options) {
  if (name == "all") {
    std::vector<Check> out;
    for (const std::string& s : suite_names()) {
      std::vector<Check> part = run_suite(s, options);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "identities") return identities(options);
  if (name == "oracle") return oracle(options);
  if (name == "limits") return limits(options);
  if (name == "constructions") return constructions(options);
  throw DomainError("unknown suite '" + name + "'");
}

std::vector<LimitRow> limit_table(const std::vector<double>& k_over_r) {
  std::vector<LimitRow> rows;
  const double r = 1.0;
  for (double ratio : k_over_r) {
    const Curvature k(ratio * r);
    const RightTriangle t = solve_right_triangle({.a = Length(r), .b = Length(r)}, k);
    rows.push_back(LimitRow{
        ratio,
        std::abs(circle_circumference(Length(r), k).value() / (2.0 * pi * r) - 1.0),
        std::abs(circle_area(Length(r), k).value() / (pi * r * r) - 1.0),
        std::abs(sphere_measures(Length(r), k).volume / (4.0 / 3.0 * pi * r * r * r) - 1.0),
        t.defect(),
    });
  }
  return rows;
}

double fitted_order(const std::vector<double>& k_over_r, const std::vector<double>& residuals) {
  if (k_over_r.size() != residuals.size() || k_over_r.size() < 2) throw DomainError("need at least two samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(k_over_r.size());
  for (std::size_t i = 0; i < k_over_r.size(); ++i) {
    const double x = -std::log(k_over_r[i]), y = std::log(residuals[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double integrate_triangle_area(const DiskPoint& a0, const DiskPoint& b0, const DiskPoint& c0, int panels) {
  // Polar origin at the sharpest vertex: the opposite side stays far away
  // and the radial extent is smooth over the narrow sweep.
  std::array<DiskPoint, 3> v{a0, b0, c0};
  std::size_t sharp = 0;
  double smallest = INFINITY;
  for (std::size_t i = 0; i < 3; ++i) {
    const double ang = disk::measure_angle(v[i], v[(i + 1) % 3], v[(i + 2) % 3]).radians();
    if (ang < smallest) {
      smallest = ang;
      sharp = i;
    }
  }
  const DiskPoint& a = v[sharp];
  const DiskPoint& b = v[(sharp + 1) % 3];
  const DiskPoint& c = v[(sharp + 2) % 3];
  const disk::Isometry t = disk::Isometry::to_origin(a);
  const Complex pb = t.apply(b).z(), pc = t.apply(c).z();
  const Geodesic side = disk::geodesic_through(t.apply(b), t.apply(c));
  double from = std::arg(pb), span = std::arg(pc / pb);
  if (span < 0.0) {
    from += span;
    span = -span;
  }
  // Radial extent along the ray at angle theta: where it meets side bc.
  const auto extent = [&](double theta) {
    const Geodesic ray(IdealPoint(theta + pi), IdealPoint(theta));
    const std::vector<DiskPoint> hit = disk::intersect(disk::Shape{ray}, disk::Shape{side});
    if (hit.empty()) throw DomainError("ray misses the opposite side");
    return std::abs(hit.front().z());
  };
  // Inner integral of 4 rho / (1 - rho^2)^2 over [0, R], with rho = tanh(s / 2).
  const auto radial = [&](double theta) {
    const double reach = 2.0 * std::atanh(extent(theta));
    return gauss_legendre(
        [](double s) {
          const double rho = std::tanh(s / 2.0);
          const double jac = (1.0 - rho * rho) / 2.0;  // d rho / d s
          return 4.0 * rho / std::pow(1.0 - rho * rho, 2) * jac;
        },
        0.0, reach);
  };
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    total += gauss_legendre(radial, from + span * i / panels, from + span * (i + 1) / panels);
  }
  return total;
}

}  // namespace hypkit::verify
