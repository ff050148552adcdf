#pragma once

// Classical constructions expressed as replayable scripts.
//
// Each emit_* appends steps to a builder and returns the names of the
// objects it made; each construct_* wraps one emit_* in a fresh script,
// replays it through run() and reports the measured results.

#include <string>
#include <utility>
#include <vector>

#include "hypkit/builder.hpp"
#include "hypkit/construction.hpp"
#include "hypkit/quadrature.hpp"
#include "hypkit/triangles.hpp"

namespace hypkit {

struct Construction {
  Script script;
  ConstructionState state;
  Report report;
};

struct ParallelNames {
  std::string foot;  // B, foot of the perpendicular from D
  std::string ray;   // DM
  std::string end;   // M, the shared ideal end
};

/// The parallel from D to `line` towards its ideal end `toward`:
/// DB perpendicular to the line, A at unit distance from B towards the end,
/// AE erected at A, DE perpendicular to AE, O on ray BD with AO = ED, then
/// angle AOB laid off at D from DB.
ParallelNames emit_parallel(ScriptBuilder& b, const std::string& line, const std::string& toward,
                            const std::string& d, const std::string& prefix = "");

struct SegmentNames {
  std::string foot;     // L
  std::string segment;  // AL
  std::string helper;   // B, the point whose parallel closes the triangle
};

/// Segment AL on `arm` whose angle of parallelism is the angle between
/// `arm` and the ray from A to the ideal point `parallel_end`. The
/// triangle A, B, N (N ideal) is closed by the parallel from B; two of
/// its altitudes meet at O and the foot of O on the arm is L. `phi` is
/// only used for the closing assertion. Helper objects are named with `prefix`.
SegmentNames emit_parallelism_segment(ScriptBuilder& b, const std::string& a, const std::string& parallel_end,
                                      const std::string& arm, double phi, const std::string& foot = "L",
                                      const std::string& prefix = "");

struct QuadratureAngleNames {
  std::string d;  // CD = s
  std::string m;  // CM perpendicular to CA
  std::string n;  // ideal end of CN
};

/// Angle z = MCN with pi tan^2 z equal to the area of the circle of radius s.
QuadratureAngleNames emit_quadrature_angle(ScriptBuilder& b, const std::string& c, const std::string& direction,
                                           const std::string& s);

struct PolygonTriangleNames {
  std::string center;    // O, angle alpha
  std::string vertex;    // R, angle beta
  std::string midpoint;  // L, the right angle
  std::string axis;      // line O L
};

/// Right triangle with angles alpha, beta (multiples of pi) built from
/// b' = parallelism segment of pi/2 - alpha and c' = that of beta: the
/// triangle with hypotenuse c' and leg b' has other leg a.
PolygonTriangleNames emit_polygon_triangle(ScriptBuilder& b, const Rational& alpha, const Rational& beta,
                                           const std::string& vertex = "R");

/// Regular n-gon with interior angle v; returns the vertex names in order.
std::vector<std::string> emit_regular_polygon(ScriptBuilder& b, int n, const Rational& v_over_pi);

struct ParallelConstruction {
  Construction run;
  LineObject ray;
  disk::DiskPoint foot;
  double angle = 0.0;         // BDM
  double distance = 0.0;      // DB
  double endpoint_gap = 0.0;  // between the ends of DM and AN
};

/// Parallel from D to `line` towards line.end(). Throws DomainError when D lies on the line.
ParallelConstruction construct_parallel(const disk::Geodesic& line, const disk::DiskPoint& d);

struct SegmentConstruction {
  Construction run;
  disk::DiskPoint vertex;
  disk::DiskPoint foot;
  double length = 0.0;
};

/// Requires 0 < phi < pi/2.
SegmentConstruction construct_parallelism_segment(Angle phi);

struct RatioConstruction {
  Construction run;
  double distance = 0.0;  // AJ
  double ratio = 0.0;     // e^AJ
};

/// Angle NBQ = pi/6, A its parallelism foot, AM perpendicular to BQ, and J on
/// AM corresponding to B; AJ = ln 2.
RatioConstruction construct_ratio_distance();

/// AJ for an arbitrary angle NBQ, from the disk model without a script.
/// Equals ln(1 / sin NBQ).
double ratio_distance_numeric(Angle nbq);

struct QuadratureAngleConstruction {
  Construction run;
  double z = 0.0;
};

QuadratureAngleConstruction construct_quadrature_angle(Length s);

struct TriangleConstruction {
  Construction run;
  RightTriangle measured;  // a = LR, b = OL, c = OR
};

/// Requires alpha + beta < pi/2 and both angles constructible.
TriangleConstruction construct_right_triangle_for_polygon(const Rational& alpha_over_pi,
                                                          const Rational& beta_over_pi);

struct PolygonConstruction {
  Construction run;
  std::vector<disk::DiskPoint> vertices;
  double area = 0.0;         // by defect of the measured angles
  double closure_gap = 0.0;  // between V_n and V_0
};

/// Requires n >= 3, 0 < v < (n - 2) pi / n and a constructible central angle.
PolygonConstruction construct_regular_polygon(int n, const Rational& v_over_pi);

struct QuadratureConstruction {
  Construction run;
  QuadraturePlan plan;
  double z = 0.0;
  double polygon_area = 0.0;
  double circle_area = 0.0;
};

/// The full quadrature: the circle with pi tan^2 z = pi q, its angle z, and
/// the planned regular polygon of equal area. Throws DomainError when q is
/// inadmissible or no polygon is found.
QuadratureConstruction construct_quadrature(const Rational& tan2z);

/// Scripts shipped in the repository, as (file name, script).
std::vector<std::pair<std::string, Script>> golden_scripts();

/// Runs a recorded script and packages the result.
Construction execute(const Script& script);

}  // namespace hypkit
