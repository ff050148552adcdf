#include "hypkit/constructions.hpp"

#include <cmath>
#include <numbers>

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
constexpr int kMaxDoublings = 40;
const Curvature kUnit{1.0};

double measured_angle(const ConstructionState& s, const std::string& v, const std::string& q, const std::string& r) {
  return disk::measure_angle(s.interior_point(v), s.point(q), s.point(r)).radians();
}

double measured_dist(const ConstructionState& s, const std::string& p, const std::string& q) {
  return disk::dist(s.interior_point(p), s.interior_point(q)).value();
}

}  // namespace

Construction execute(const Script& script) {
  RunResult r = run(script);
  return Construction{script, std::move(r.state), std::move(r.report)};
}

// ------------------------------------------------------------------ emitters

ParallelNames emit_parallel(ScriptBuilder& b, const std::string& line, const std::string& toward,
                            const std::string& d, const std::string& prefix) {
  const auto name = [&](const char* base) { return b.fresh(prefix + base); };
  const std::string unit = b.unit();
  const auto db = b.drop(name("DB"), name("B"), d, line);
  const std::string ca = b.circle_length(name("cA"), db.foot, unit);
  const std::string a = b.intersect_near(name("A"), ca, line, toward);
  const std::string ae = b.erect(name("AE"), a, line);
  const auto de = b.drop(name("DE"), name("E"), d, ae);
  const std::string co = b.circle_radius(name("cO"), a, de.foot, d);
  const std::string o = b.intersect_near(name("O"), co, db.line, d);
  const std::string dm = b.transfer_toward(name("DM"), o, a, db.foot, d, db.foot, toward);
  const std::string m = b.mark(name("M"), dm, Selector::end);
  b.check("same_ideal", {m, toward});
  b.check("angle_is_parallelism", {d, db.foot, m, d, db.foot});
  return ParallelNames{db.foot, dm, m};
}

namespace {

SegmentNames close_segment(ScriptBuilder& b, const std::string& a, const std::string& end, const std::string& arm,
                           const std::string& helper, double phi, const std::string& foot,
                           const std::string& prefix) {
  const auto name = [&](const char* base) { return b.fresh(prefix + base); };
  const std::string am = b.line(name("AMl"), a, end);
  const ParallelNames par = emit_parallel(b, am, end, helper, prefix + "p");
  const auto ah = b.drop(name("AH"), name("H"), a, par.ray);
  const auto bk = b.drop(name("BK"), name("K"), helper, am);
  const std::string o = b.intersect_near(name("O"), ah.line, bk.line, a);
  const auto ol = b.drop(name("OL"), b.fresh(foot), o, arm);
  const std::string al = b.segment(b.fresh(a + ol.foot), a, ol.foot);
  const auto nn = b.drop(name("NF"), name("F"), end, arm);
  b.check("concurrent", {ah.line, bk.line, nn.line});
  b.check("coincide", {ol.foot, nn.foot});
  b.check("parallelism_of", {a, ol.foot, phi});
  return SegmentNames{ol.foot, al, helper};
}

}  // namespace

SegmentNames emit_parallelism_segment(ScriptBuilder& b, const std::string& a, const std::string& parallel_end,
                                      const std::string& arm, double phi, const std::string& foot,
                                      const std::string& prefix) {
  const AnyPoint toward = b.state().line(arm).to;

  // First helper at unit distance along the arm; doubled until the altitudes meet.
  const std::string ca = b.circle_length(b.fresh(prefix + "cB"), a, b.unit());
  std::string helper = b.choose("intersect", {b.fresh(prefix + "B"), ca, arm}, {Selector::first, Selector::second},
                                [&](const ConstructionState& s, const std::string& o) {
                                  return separation(s.point(o), toward);
                                });
  for (int i = 0;; ++i) {
    ScriptBuilder trial = b;
    try {
      SegmentNames out = close_segment(trial, a, parallel_end, arm, helper, phi, foot, prefix);
      b = std::move(trial);
      return out;
    } catch (const ConstructionError&) {
      if (i == kMaxDoublings) throw;
    }
    const std::string cd = b.circle_through(b.fresh(prefix + "cB"), helper, a);
    helper = b.intersect_far(b.fresh(prefix + "B"), cd, arm, a);
  }
}

QuadratureAngleNames emit_quadrature_angle(ScriptBuilder& b, const std::string& c, const std::string& direction,
                                           const std::string& s) {
  const std::string cp = b.ray(b.fresh(c + direction), c, direction);
  const std::string cs = b.circle_length(b.fresh("cs"), c, s);
  const std::string d = b.intersect_near(b.fresh("D"), cs, cp, direction);
  const std::string e = b.bisect_segment(b.fresh("E"), c, d);
  const std::string ell = b.erect(b.fresh("ell"), e, cp);
  const std::string w = b.mark(b.fresh("W"), ell, Selector::end);
  const ParallelNames db = emit_parallel(b, ell, w, d, "d");
  const ParallelNames cn = emit_parallel(b, ell, w, c, "c");
  const auto ca = b.drop(b.fresh("CA"), b.fresh("A"), c, db.ray);
  const std::string cm = b.erect(b.fresh("CM"), c, ca.line);
  const std::string m = b.mark_near(b.fresh("M"), cm, cn.end);
  b.check("quadrature", {c, m, cn.end, c, d}, 1e-8);
  return QuadratureAngleNames{d, m, cn.end};
}

PolygonTriangleNames emit_polygon_triangle(ScriptBuilder& b, const Rational& alpha, const Rational& beta,
                                           const std::string& vertex) {
  if (!(Rational(0) < alpha && Rational(0) < beta && alpha + beta < Rational(1, 2))) {
    throw DomainError("angles must be positive with alpha + beta < pi/2");
  }
  const Rational phi1 = Rational(1, 2) - alpha;
  const double b_prime = parallelism_segment(Angle(phi1.value() * pi), kUnit).value();
  const double leg_b = std::acosh(std::cos(beta.value() * pi) / std::sin(alpha.value() * pi));

  // Place A1 so that the centre O lands on the origin.
  const std::string a1 = b.point(b.fresh("A1"), DiskPoint(-std::tanh((b_prime - leg_b) / 2.0), 0.0));
  const std::string q = b.ideal(b.fresh("Q"), IdealPoint(0.0));
  const std::string axis = b.ray(b.fresh(a1 + q), a1, q);

  const std::string arm1 = b.lay_angle(b.fresh("arm1"), a1, q, phi1, Selector::left);
  const std::string m1 = b.mark(b.fresh("N1"), arm1, Selector::end);
  const std::string arm2 = b.lay_angle(b.fresh("arm2"), a1, q, beta, Selector::right);
  const std::string m2 = b.mark(b.fresh("N2"), arm2, Selector::end);

  const SegmentNames sb = emit_parallelism_segment(b, a1, m1, axis, phi1.value() * pi, "L", "b");
  const SegmentNames sc = emit_parallelism_segment(b, a1, m2, axis, beta.value() * pi, "Lc", "c");

  const std::string lr = b.erect(b.fresh("LR"), sb.foot, axis);
  const std::string cr = b.circle_radius(b.fresh("cR"), a1, a1, sc.foot);
  const std::string r = b.intersect_near(b.fresh(vertex), cr, lr, m1);

  // Lay beta at R towards A1's side of L.
  const std::string ro_name = b.fresh("RO");
  const std::string o_name = b.fresh("O");
  double best = INFINITY;
  Selector side = Selector::left;
  for (Selector s : {Selector::left, Selector::right}) {
    ScriptBuilder trial = b;
    try {
      trial.step("transfer_angle", {ro_name, a1, q, m2, r, sb.foot}, s);
      trial.intersect_near(o_name, ro_name, axis, a1);
      const double d = measured_dist(trial.state(), o_name, a1);
      if (d < best) {
        best = d;
        side = s;
      }
    } catch (const ConstructionError&) {
    }
  }
  b.step("transfer_angle", {ro_name, a1, q, m2, r, sb.foot}, side);
  const std::string o = b.intersect_near(o_name, ro_name, axis, a1);

  b.check("angle", {sb.foot, o, r, pi / 2.0});
  b.check("angle", {o, sb.foot, r, alpha.value() * pi});
  b.check("angle", {r, sb.foot, o, beta.value() * pi});
  return PolygonTriangleNames{o, r, sb.foot, axis};
}

std::vector<std::string> emit_regular_polygon(ScriptBuilder& b, int n, const Rational& v_over_pi) {
  if (n < 3) throw DomainError("a polygon needs at least 3 sides");
  if (!(Rational(0) < v_over_pi && v_over_pi < Rational(n - 2, n))) {
    throw DomainError("interior angle must lie in (0, (n - 2) pi / n)");
  }
  if (!gauss_constructible(n)) {
    throw DomainError("central angle 2 pi / " + std::to_string(n) + " is not constructible: " +
                      factorization_string(n));
  }
  const PolygonTriangleNames t = emit_polygon_triangle(b, Rational(1, n), v_over_pi / Rational(2), b.fresh("V0"));

  std::vector<std::string> v{t.vertex};
  v.push_back(b.reflect(b.fresh("V1"), t.vertex, t.axis));
  for (int j = 1; j < n; ++j) {
    const std::string spoke = b.line(b.fresh("OV" + std::to_string(j)), t.center, v[j]);
    const std::string next = b.fresh(j + 1 == n ? "Vclose" : "V" + std::to_string(j + 1));
    v.push_back(b.reflect(next, v[j - 1], spoke));
  }
  const std::string closing = v.back();
  v.pop_back();

  for (int j = 0; j < n; ++j) {
    const std::string& p = v[j];
    const std::string& q = v[(j + 1) % n];
    b.segment(b.fresh("side" + std::to_string(j)), p, q);
    const std::string mid = b.bisect_segment(b.fresh("Mid" + std::to_string(j)), p, q);
    b.segment(b.fresh("ray" + std::to_string(j)), t.center, p);
    b.segment(b.fresh("apo" + std::to_string(j)), t.center, mid);
  }

  const double v_rad = v_over_pi.value() * pi;
  std::vector<AssertArg> angles{v_rad}, sides, area{((n - 2) - n * v_over_pi.value()) * pi};
  for (const std::string& p : v) {
    angles.emplace_back(p);
    sides.emplace_back(p);
    area.emplace_back(p);
  }
  b.check("coincide", {closing, v.front()});
  b.check("polygon_angles", angles);
  b.check("polygon_sides_equal", sides);
  b.check("polygon_area", area);
  return v;
}

// ------------------------------------------------------------ constructions

ParallelConstruction construct_parallel(const Geodesic& line, const DiskPoint& d) {
  if (disk::distance_to(d, line).value() < 1e-9) throw DomainError("D lies on the line");
  ScriptBuilder b("parallel");
  b.ideal("X", line.start());
  b.ideal("N", line.end());
  b.point("D", d);
  b.line("AN", "X", "N");
  const ParallelNames names = emit_parallel(b, "AN", "N", "D");
  b.output(names.ray);

  Construction run = execute(b.script());
  const ConstructionState& s = run.state;
  const LineObject ray = s.line(names.ray);
  const DiskPoint foot = s.interior_point(names.foot);
  const double angle = measured_angle(s, "D", names.foot, names.end);
  const double distance = measured_dist(s, "D", names.foot);
  const double gap = disk::angular_gap(s.ideal_point(names.end), s.ideal_point("N"));
  return ParallelConstruction{std::move(run), ray, foot, angle, distance, gap};
}

namespace {

Script parallelism_segment_script(double phi) {
  if (!(phi > 0.0 && phi < pi / 2.0)) throw DomainError("the angle must be acute and positive");
  ScriptBuilder b("parallelism_segment");
  b.point("A", DiskPoint(-0.5, 0.0));
  b.ideal("Q", IdealPoint(0.0));
  b.ray("AQ", "A", "Q");
  b.ideal("Mdir", disk::ideal_along(DiskPoint(-0.5, 0.0), std::polar(1.0, phi)));
  b.ray("AM", "A", "Mdir");
  const SegmentNames seg = emit_parallelism_segment(b, "A", "Mdir", "AQ", phi);
  b.output(seg.segment);
  return b.script();
}

}  // namespace

SegmentConstruction construct_parallelism_segment(Angle phi) {
  Construction run = execute(parallelism_segment_script(phi.radians()));
  const DiskPoint vertex = run.state.interior_point("A");
  const DiskPoint foot = run.state.interior_point("L");
  const double length = disk::dist(vertex, foot).value();
  return SegmentConstruction{std::move(run), vertex, foot, length};
}

namespace {

Script ratio_distance_script() {
  ScriptBuilder b("ratio_distance");
  b.point("B", DiskPoint(-0.6, -0.3));
  b.ideal("Q", IdealPoint(0.0));
  b.ray("BQ", "B", "Q");
  b.lay_angle("BN", "B", "Q", Rational(1, 6), Selector::left);
  b.mark("N", "BN", Selector::end);
  emit_parallelism_segment(b, "B", "N", "BQ", pi / 6.0, "A", "s");
  b.erect("AM", "A", "BQ");
  b.mark_near("M", "AM", "N");
  b.bisect_angle("bB", "B", "A", "N");
  b.bisect_angle("bA", "A", "B", "M");
  b.intersect_near("I", "bB", "bA", "B");
  const ParallelNames in = emit_parallel(b, "BN", "N", "I", "i");
  b.reflect("J", "B", in.ray);
  b.segment("AJ", "A", "J");
  b.check("same_ideal", {"M", "N"});
  b.check("on_curve", {"J", "AM"});
  b.check("corresponding", {"B", "J", "AM", "M"});
  b.check("dist", {"J", "A", std::log(2.0)});
  b.check("arc_ratio", {"J", "A", 2.0});
  b.output("AJ");
  return b.script();
}

}  // namespace

RatioConstruction construct_ratio_distance() {
  RatioConstruction out;
  out.run = execute(ratio_distance_script());
  out.distance = measured_dist(out.run.state, "A", "J");
  out.ratio = std::exp(out.distance);
  return out;
}

double ratio_distance_numeric(Angle nbq) {
  const double theta = nbq.radians();
  if (!(theta > 0.0 && theta < pi / 2.0)) throw DomainError("the angle must be acute and positive");
  const DiskPoint b(0.0, 0.0);
  const IdealPoint n = disk::ideal_along(b, std::polar(1.0, theta));
  const DiskPoint a = disk::point_along(b, 1.0, parallelism_segment(nbq, kUnit).value());
  const Geodesic am = disk::perpendicular(a, disk::geodesic_through(b, IdealPoint(0.0))).line;
  const IdealPoint end = disk::angular_gap(am.end(), n) < disk::angular_gap(am.start(), n) ? am.end() : am.start();
  return disk::dist(a, disk::corresponding_point(b, am, end)).value();
}

QuadratureAngleConstruction construct_quadrature_angle(Length s) {
  if (!(s.value() > 0.0)) throw DomainError("radius must be positive");
  ScriptBuilder b("quadrature_angle");
  b.point("C", DiskPoint(0.0, 0.0));
  b.ideal("P", IdealPoint(0.0));
  b.length("s", s.value());
  const QuadratureAngleNames q = emit_quadrature_angle(b, "C", "P", "s");
  b.output(q.m);

  QuadratureAngleConstruction out;
  out.run = execute(b.script());
  out.z = measured_angle(out.run.state, "C", q.m, q.n);
  return out;
}

TriangleConstruction construct_right_triangle_for_polygon(const Rational& alpha_over_pi,
                                                          const Rational& beta_over_pi) {
  ScriptBuilder b("polygon_triangle");
  const PolygonTriangleNames t = emit_polygon_triangle(b, alpha_over_pi, beta_over_pi);
  b.output(t.center);
  b.output(t.vertex);
  b.output(t.midpoint);

  Construction run = execute(b.script());
  const ConstructionState& s = run.state;
  const RightTriangle measured{Length(measured_dist(s, t.midpoint, t.vertex)),
                               Length(measured_dist(s, t.center, t.midpoint)),
                               Length(measured_dist(s, t.center, t.vertex)),
                               Angle(measured_angle(s, t.center, t.midpoint, t.vertex)),
                               Angle(measured_angle(s, t.vertex, t.midpoint, t.center)),
                               kUnit};
  return TriangleConstruction{std::move(run), measured};
}

namespace {

double defect_of(const ConstructionState& s, const std::vector<std::string>& v) {
  const std::size_t n = v.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += measured_angle(s, v[i], v[(i + n - 1) % n], v[(i + 1) % n]);
  return (static_cast<double>(n) - 2.0) * pi - sum;
}

}  // namespace

PolygonConstruction construct_regular_polygon(int n, const Rational& v_over_pi) {
  ScriptBuilder b("regular_polygon_" + std::to_string(n));
  const std::vector<std::string> names = emit_regular_polygon(b, n, v_over_pi);
  for (const std::string& v : names) b.output(v);

  PolygonConstruction out;
  out.run = execute(b.script());
  const ConstructionState& s = out.run.state;
  for (const std::string& v : names) out.vertices.push_back(s.interior_point(v));
  out.area = defect_of(s, names);
  out.closure_gap = measured_dist(s, "Vclose", names.front());
  return out;
}

namespace {

struct QuadratureScript {
  Script script;
  QuadraturePlan plan;
  QuadratureAngleNames angle;
  std::vector<std::string> vertices;
};

QuadratureScript quadrature_script(const Rational& tan2z, const std::string& name) {
  QuadratureScript out;
  out.plan = plan(tan2z);
  if (out.plan.outcome == PlanOutcome::inadmissible) {
    throw DomainError("tan^2 z = " + tan2z.str() + " is not admissible: " + out.plan.certificate);
  }
  if (out.plan.outcome != PlanOutcome::planned) {
    throw DomainError("no constructible polygon with at most " + std::to_string(kPolygonSearchBound) + " sides");
  }
  ScriptBuilder b(name);
  b.point("C", DiskPoint(0.0, 0.0));
  b.ideal("P", IdealPoint(pi / 2.0));
  b.length("s", quadrature_circle_radius(tan2z.value(), kUnit).value());
  out.angle = emit_quadrature_angle(b, "C", "P", "s");
  out.vertices = emit_regular_polygon(b, out.plan.n, out.plan.v_over_pi);
  std::vector<AssertArg> args{std::string("C"), out.angle.d};
  for (const std::string& v : out.vertices) args.emplace_back(v);
  b.check("polygon_area_circle", args, 1e-8);
  for (const std::string& v : out.vertices) b.output(v);
  out.script = b.script();
  return out;
}

}  // namespace

QuadratureConstruction construct_quadrature(const Rational& tan2z) {
  QuadratureScript q = quadrature_script(tan2z, "quadrature");
  QuadratureConstruction out;
  out.plan = q.plan;
  out.run = execute(q.script);
  const ConstructionState& s = out.run.state;
  out.z = measured_angle(s, "C", q.angle.m, q.angle.n);
  out.polygon_area = defect_of(s, q.vertices);
  out.circle_area = circle_area(Length(measured_dist(s, "C", q.angle.d)), kUnit).value();
  return out;
}

std::vector<std::pair<std::string, Script>> golden_scripts() {
  std::vector<std::pair<std::string, Script>> out;
  out.emplace_back("parallel.script",
                   construct_parallel(Geodesic(IdealPoint(-2.6), IdealPoint(-0.4)), DiskPoint(0.1, 0.3)).run.script);
  out.emplace_back("parallelism_segment.script", parallelism_segment_script(pi / 4.0));
  out.emplace_back("ratio_distance.script", ratio_distance_script());
  out.emplace_back("square_quadrature.script", quadrature_script(Rational(1), "square_quadrature").script);
  out.emplace_back("hexagon_quadrature.script", quadrature_script(Rational(3), "hexagon_quadrature").script);
  return out;
}

}  // namespace hypkit
