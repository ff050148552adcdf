// hypkit command-line front end.
//
// Exit codes: 0 success, 1 usage or domain error, 2 assertion or
// verification failure, 3 numeric out-of-range.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypkit/constructions.hpp"
#include "hypkit/core_trig.hpp"
#include "hypkit/error.hpp"
#include "hypkit/expression.hpp"
#include "hypkit/quadrature.hpp"
#include "hypkit/script_io.hpp"
#include "hypkit/svg.hpp"
#include "hypkit/triangles.hpp"
#include "hypkit/verify.hpp"

using namespace hypkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;
constexpr int kExitRange = 3;
constexpr double pi = std::numbers::pi;

enum class Format { text, kv };

struct Config {
  std::string k_text = "1";
  double tol = 1e-9;
  bool tol_given = false;
  std::uint64_t seed = 42;
  std::string out;
  Format format = Format::text;
  AngleUnit angle_unit = AngleUnit::rad;

  Curvature k() const { return Curvature(evaluate_expression(k_text)); }
};

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Text mode aligns "key  value"; kv mode prints key=value.
class Printer {
 public:
  explicit Printer(Format f) : format_(f) {}

  void field(const std::string& key, const std::string& value) const {
    if (format_ == Format::kv) {
      std::cout << key << "=" << value << "\n";
    } else {
      std::printf("%-22s %s\n", key.c_str(), value.c_str());
    }
  }
  void number(const std::string& key, double v) const { field(key, fmt(v)); }
  void angle(const std::string& key, double radians) const {
    if (format_ == Format::kv) {
      field(key, fmt(radians));
      field(key + "_deg", fmt(radians * 180.0 / pi));
    } else {
      field(key, fmt(radians) + " rad (" + fmt(radians * 180.0 / pi) + " deg)");
    }
  }
  void note(const std::string& text) const {
    if (format_ == Format::text) std::cout << text << "\n";
  }
  bool kv() const { return format_ == Format::kv; }

 private:
  Format format_;
};

std::map<std::string, std::string> parse_pairs(const std::vector<std::string>& items) {
  std::map<std::string, std::string> out;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw DomainError("expected key=value, got '" + item + "'");
    if (!out.emplace(item.substr(0, eq), item.substr(eq + 1)).second) {
      throw DomainError("'" + item.substr(0, eq) + "' given twice");
    }
  }
  return out;
}

// ---------------------------------------------------------------- solve

int cmd_solve(const Config& cfg, bool general, const std::vector<std::string>& givens) {
  const Printer p(cfg.format);
  const auto pairs = parse_pairs(givens);
  const Curvature k = cfg.k();
  const auto length = [](const std::string& v) { return Length(evaluate_expression(v)); };
  const auto angle = [&](const std::string& v) { return Angle(evaluate_angle(v, cfg.angle_unit)); };
  if (!general) {
    RightTriangleGivens g;
    for (const auto& [key, value] : pairs) {
      if (key == "a") g.a = length(value);
      else if (key == "b") g.b = length(value);
      else if (key == "c") g.c = length(value);
      else if (key == "alpha") g.alpha = angle(value);
      else if (key == "beta") g.beta = angle(value);
      else throw DomainError("unknown right-triangle element '" + key + "' (use a, b, c, alpha, beta)");
    }
    const RightTriangle t = solve_right_triangle(g, k);
    p.number("a", t.a.value());
    p.number("b", t.b.value());
    p.number("c", t.c.value());
    p.angle("alpha", t.alpha.radians());
    p.angle("beta", t.beta.radians());
    p.angle("gamma", pi / 2.0);
    p.number("defect", t.defect());
    p.number("area", t.area());
    p.number("k", k.value());
    return kExitOk;
  }
  GeneralTriangleGivens g;
  for (const auto& [key, value] : pairs) {
    if (key == "a") g.a = length(value);
    else if (key == "b") g.b = length(value);
    else if (key == "c") g.c = length(value);
    else if (key == "A") g.A = angle(value);
    else if (key == "B") g.B = angle(value);
    else if (key == "C") g.C = angle(value);
    else throw DomainError("unknown triangle element '" + key + "' (use a, b, c, A, B, C)");
  }
  const GeneralTriangle t = solve_general_triangle(g, k);
  p.number("a", t.a.value());
  p.number("b", t.b.value());
  p.number("c", t.c.value());
  p.angle("A", t.A.radians());
  p.angle("B", t.B.radians());
  p.angle("C", t.C.radians());
  p.number("defect", t.defect());
  p.number("area", t.area());
  p.number("k", k.value());
  return kExitOk;
}

// ----------------------------------------------------------------- eval

struct Args {
  std::map<std::string, std::string> pairs;
  const Config& cfg;

  const std::string& raw(const std::string& key) const {
    const auto it = pairs.find(key);
    if (it == pairs.end()) throw DomainError("missing argument " + key + "=...");
    return it->second;
  }
  Length length(const std::string& key) const { return Length(evaluate_expression(raw(key))); }
  Angle angle(const std::string& key) const { return Angle(evaluate_angle(raw(key), cfg.angle_unit)); }
  double number(const std::string& key) const { return evaluate_expression(raw(key)); }
};

struct Quantity {
  std::string params;
  std::string formula;
  std::function<void(const Args&, const Curvature&, const Printer&)> eval;
};

const std::map<std::string, Quantity>& catalog() {
  static const std::map<std::string, Quantity> table{
      {"arc-ratio",
       {"x", "X = e^(x/k)",
        [](const Args& a, const Curvature& k, const Printer& p) {
          p.number("X", arc_ratio(a.length("x"), k).value());
        }}},
      {"parallelism",
       {"y", "cot(Pi(y)/2) = e^(y/k)",
        [](const Args& a, const Curvature& k, const Printer& p) {
          p.angle("Pi", angle_of_parallelism(a.length("y"), k).radians());
        }}},
      {"parallelism-segment",
       {"u", "y = k ln cot(u/2)",
        [](const Args& a, const Curvature& k, const Printer& p) {
          p.number("y", parallelism_segment(a.angle("u"), k).value());
        }}},
      {"circumference",
       {"r", "2 pi k sinh(r/k)",
        [](const Args& a, const Curvature& k, const Printer& p) {
          p.number("circumference", circle_circumference(a.length("r"), k).value());
        }}},
      {"circle-area",
       {"r", "4 pi k^2 sinh^2(r/2k)",
        [](const Args& a, const Curvature& k, const Printer& p) {
          p.number("area", circle_area(a.length("r"), k).value());
        }}},
      {"equidistant-arc",
       {"a b", "a cosh(b/k)",
        [](const Args& a, const Curvature& k, const Printer& p) {
          p.number("length", equidistant_arc_length(a.length("a"), a.length("b"), k).value());
        }}},
      {"horocycle-arc",
       {"y", "k sinh(y/k)",
        [](const Args& a, const Curvature& k, const Printer& p) {
          p.number("length", horocycle_arc_length(a.length("y"), k).value());
        }}},
      {"chord-to-semichord",
       {"s", "sinh(s/2k) = sinh(y/k) / 2",
        [](const Args& a, const Curvature& k, const Printer& p) {
          p.number("y", chord_to_semichord(a.length("s"), k).value());
        }}},
      {"lcurve-point",
       {"x", "e^(y/k) = e^(x/k) + sqrt(e^(2x/k) - 1)",
        [](const Args& a, const Curvature& k, const Printer& p) {
          p.number("y", lcurve_point(a.length("x"), k).value());
        }}},
      {"lcurve-arc",
       {"x", "k sqrt(X^2 - 1), X = e^(x/k)",
        [](const Args& a, const Curvature& k, const Printer& p) {
          p.number("length", lcurve_arc_length(a.length("x"), k).value());
        }}},
      {"horocycle-strip",
       {"r x (x=inf for the unbounded strip)", "r k (1 - e^(-x/k))",
        [](const Args& a, const Curvature& k, const Printer& p) {
          const std::string& x = a.raw("x");
          const StripDepth depth = (x == "inf") ? StripDepth{unbounded} : StripDepth{a.length("x")};
          p.number("area", horocycle_sector_area(a.length("r"), depth, k).value());
        }}},
      {"axial-volume",
       {"p", "p k / 2",
        [](const Args& a, const Curvature& k, const Printer& p) {
          p.number("volume", axial_volume(a.length("p"), k));
        }}},
      {"equidistant-region",
       {"p q", "area p k sinh(q/k); solids by revolution about p",
        [](const Args& a, const Curvature& k, const Printer& p) {
          const EquidistantRegion r = equidistant_region_measures(a.length("p"), a.length("q"), k);
          p.number("area", r.area);
          p.number("prism_volume", r.prism_volume);
          p.number("revolution_surface", r.revolution_surface);
          p.number("revolution_volume", r.revolution_volume);
        }}},
      {"sphere",
       {"x", "surface (2 pi k sinh(x/k))^2 / pi; volume pi k^3 sinh(2x/k) - 2 pi k^2 x",
        [](const Args& a, const Curvature& k, const Printer& p) {
          const SphereMeasures m = sphere_measures(a.length("x"), k);
          p.number("great_circle", m.great_circle);
          p.number("surface", m.surface);
          p.number("volume", m.volume);
        }}},
      {"spherical-cap",
       {"p u", "p^2 (1 - cos u) / (2 pi)",
        [](const Args& a, const Curvature&, const Printer& p) {
          p.number("area", spherical_cap_area(a.length("p"), a.angle("u")).value());
        }}},
      {"spherical-triangle",
       {"excess p", "excess p^2 / (4 pi^2)",
        [](const Args& a, const Curvature&, const Printer& p) {
          p.number("area", spherical_triangle_area(a.number("excess"), a.length("p")).value());
        }}},
      {"spherical-right-sine",
       {"a b", "sin A = sin a / sin b",
        [](const Args& a, const Curvature&, const Printer& p) {
          p.angle("A", spherical_right_sine(a.angle("a"), a.angle("b")).radians());
        }}},
      {"polygon-area",
       {"angles (comma separated)", "k^2 ((n - 2) pi - sum of angles)",
        [](const Args& a, const Curvature& k, const Printer& p) {
          std::vector<Angle> angles;
          std::stringstream ss(a.raw("angles"));
          for (std::string item; std::getline(ss, item, ',');) {
            angles.emplace_back(evaluate_angle(item, a.cfg.angle_unit));
          }
          p.number("area", polygon_area_from_angles(angles, k).value());
        }}},
  };
  return table;
}

int cmd_eval(const Config& cfg, const std::string& quantity, const std::vector<std::string>& args) {
  const Printer p(cfg.format);
  const auto& table = catalog();
  if (quantity.empty() || quantity == "list") {
    for (const auto& [name, q] : table) p.field(name, q.params + "    " + q.formula);
    return kExitOk;
  }
  const auto it = table.find(quantity);
  if (it == table.end()) {
    std::string known;
    for (const auto& entry : table) known += " " + entry.first;
    throw DomainError("unknown quantity '" + quantity + "'; known:" + known);
  }
  const Curvature k = cfg.k();
  it->second.eval(Args{parse_pairs(args), cfg}, k, p);
  p.field("formula", it->second.formula);
  p.number("k", k.value());
  return kExitOk;
}

// ------------------------------------------------------------ construct

bool print_report(const Printer& p, const Report& report) {
  if (p.kv()) {
    for (std::size_t i = 0; i < report.results.size(); ++i) {
      const AssertionResult& r = report.results[i];
      const std::string pre = "assert." + std::to_string(i) + ".";
      p.field(pre + "label", r.label);
      p.number(pre + "expected", r.expected);
      p.number(pre + "measured", r.measured);
      p.number(pre + "residual", r.residual);
      p.number(pre + "tol", r.tol);
      p.field(pre + "status", r.passed ? "pass" : "fail");
      if (!r.note.empty()) p.field(pre + "note", r.note);
    }
  } else {
    std::printf("%-52s %18s %18s %10s %8s  %s\n", "assertion", "expected", "measured", "residual", "tol", "status");
    for (const AssertionResult& r : report.results) {
      std::printf("%-52s %18s %18s %10.3g %8.1e  %s%s%s\n", r.label.c_str(), fmt(r.expected).c_str(),
                  fmt(r.measured).c_str(), r.residual, r.tol, r.passed ? "pass" : "FAIL", r.note.empty() ? "" : "  ",
                  r.note.c_str());
    }
  }
  p.field("result", report.passed() ? "pass" : "fail");
  return report.passed();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path.string());
  out << content;
}

int cmd_construct(const Config& cfg, const std::string& path) {
  const Printer p(cfg.format);
  Script script = load_script(path);
  if (cfg.tol_given) {
    for (Assertion& a : script.asserts) a.tol = cfg.tol;
  }
  const Construction c = execute(script);
  p.field("script", script.name.empty() ? path : script.name);
  p.number("steps", static_cast<double>(script.steps.size()));
  p.number("objects", static_cast<double>(c.state.objects().size()));
  const std::filesystem::path svg =
      cfg.out.empty() ? std::filesystem::path(path).filename().replace_extension(".svg") : std::filesystem::path(cfg.out);
  write_file(svg, render_svg(c.state));
  p.field("svg", svg.string());
  return print_report(p, c.report) ? kExitOk : kExitFailure;
}

// ----------------------------------------------------------- quadrature

int cmd_quadrature(const Config& cfg, const std::string& q_text, bool build, const std::string& script_out) {
  const Printer p(cfg.format);
  const Rational q = Rational::parse(q_text);
  const Curvature k = cfg.k();
  const QuadraturePlan plan_result = plan(q);
  p.field("tan2z", q.str());
  p.field("admissible", plan_result.admissible ? "yes" : "no");
  p.field("certificate", plan_result.certificate);
  if (plan_result.outcome == PlanOutcome::inadmissible) {
    std::cerr << "rejected: tan^2 z = " << q.str() << " is not admissible; " << plan_result.certificate << "\n";
    return kExitUsage;
  }
  if (plan_result.outcome == PlanOutcome::unplanned) {
    std::cerr << "no regular polygon with a constructible angle and at most " << kPolygonSearchBound << " sides\n";
    return kExitFailure;
  }
  p.number("n", plan_result.n);
  p.angle("v", plan_result.v().radians());
  p.field("v_over_pi", plan_result.v_over_pi.str());
  p.number("target_area", plan_result.target_area_over_k2 * k.value() * k.value());
  p.number("s", quadrature_circle_radius(q.value(), k).value());
  const PolygonDimensions dims = polygon_dimensions(plan_result.n, plan_result.v(), k);
  p.number("circumradius", dims.circumradius.value());
  p.number("apothem", dims.apothem.value());
  p.number("side", dims.side.value());
  if (!build && script_out.empty()) return kExitOk;

  if (k.value() != 1.0) p.note("note: the construction is drawn in the disk with k = 1");
  const QuadratureConstruction c = construct_quadrature(q);
  if (!script_out.empty()) {
    save_script(script_out, c.run.script);
    p.field("script", script_out);
  }
  if (!build) return kExitOk;
  p.angle("z", c.z);
  p.number("polygon_area", c.polygon_area);
  p.number("circle_area", c.circle_area);
  if (!cfg.out.empty()) {
    write_file(cfg.out, render_svg(c.run.state));
    p.field("svg", cfg.out);
  }
  return print_report(p, c.run.report) ? kExitOk : kExitFailure;
}

// --------------------------------------------------------------- verify

int cmd_verify(const Config& cfg, const std::string& suite) {
  const Printer p(cfg.format);
  const std::vector<verify::Check> checks = verify::run_suite(suite, verify::Options{cfg.seed, cfg.k()});
  bool ok = true;
  if (p.kv()) {
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const verify::Check& c = checks[i];
      const std::string pre = "check." + std::to_string(i) + ".";
      p.field(pre + "suite", c.suite);
      p.field(pre + "property", c.property);
      p.number(pre + "samples", static_cast<double>(c.samples));
      p.number(pre + "max_residual", c.max_residual);
      p.number(pre + "tol", c.tol);
      p.field(pre + "status", c.passed ? "pass" : "fail");
      if (!c.note.empty()) p.field(pre + "note", c.note);
      ok = ok && c.passed;
    }
  } else {
    std::printf("%-14s %-64s %7s %12s %9s  %s\n", "suite", "property", "samples", "max resid", "tol", "status");
    for (const verify::Check& c : checks) {
      std::printf("%-14s %-64s %7zu %12.3e %9.1e  %s%s%s\n", c.suite.c_str(), c.property.c_str(), c.samples,
                  c.max_residual, c.tol, c.passed ? "pass" : "FAIL", c.note.empty() ? "" : "  ", c.note.c_str());
      ok = ok && c.passed;
    }
  }
  if (suite == "limits" || suite == "all") {
    const std::vector<double> ratios{1e2, 1e3, 1e4};
    if (p.kv()) {
      for (const verify::LimitRow& r : verify::limit_table(ratios)) {
        const std::string pre = "limit." + fmt(r.k_over_r) + ".";
        p.number(pre + "circumference", r.circumference);
        p.number(pre + "area", r.area);
        p.number(pre + "volume", r.volume);
        p.number(pre + "angle_sum", r.angle_sum);
      }
    } else {
      std::printf("\n%10s %14s %14s %14s %14s\n", "k/r", "circ rel err", "area rel err", "vol rel err", "angle defect");
      for (const verify::LimitRow& r : verify::limit_table(ratios)) {
        std::printf("%10g %14.6e %14.6e %14.6e %14.6e\n", r.k_over_r, r.circumference, r.area, r.volume, r.angle_sum);
      }
    }
  }
  p.field("result", ok ? "pass" : "fail");
  return ok ? kExitOk : kExitFailure;
}

// ----------------------------------------------------------------- emit

int cmd_emit(const Config& cfg, const std::string& dir) {
  const Printer p(cfg.format);
  std::filesystem::create_directories(dir);
  for (const auto& [file, script] : golden_scripts()) {
    const std::filesystem::path path = std::filesystem::path(dir) / file;
    save_script(path, script);
    p.field("wrote", path.string());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperbolic geometry kernel: closed forms, disk model, constructions and quadrature planning."};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::string format = "text", angle_unit = "rad";
  app.add_option("--k", cfg.k_text, "Linear constant k (expression, default 1)");
  auto* tol_opt = app.add_option("--tol", cfg.tol, "Override every assertion tolerance in `construct`")
                      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for the verification suites");
  app.add_option("--out", cfg.out, "Output path for SVG scenes");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "kv"}));
  app.add_option("--angle-unit", angle_unit, "Unit of angles given without a suffix")
      ->check(CLI::IsMember({"rad", "deg"}));

  auto* solve = app.add_subcommand("solve", "Solve a right (--right) or general (--general) triangle");
  bool right = false, general = false;
  std::vector<std::string> givens;
  auto* right_flag = solve->add_flag("--right", right, "Right triangle: a, b (legs), c, alpha, beta");
  solve->add_flag("--general", general, "General triangle: a, b, c, A, B, C")->excludes(right_flag);
  solve->add_option("givens", givens, "key=value pairs; angles accept a d suffix for degrees")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a closed-form quantity (`eval list` shows the catalog)");
  std::string quantity;
  std::vector<std::string> eval_args;
  eval->add_option("quantity", quantity, "Quantity name");
  eval->add_option("args", eval_args, "key=value pairs");

  auto* construct = app.add_subcommand("construct", "Run a construction script and render it as SVG");
  std::string script_path;
  construct->add_option("script", script_path, "Script file")->required();

  auto* quadrature = app.add_subcommand("quadrature", "Plan (and optionally build) the quadrature for tan^2 z");
  std::string q_text, save_path;
  bool build = false;
  quadrature->add_option("tan2z", q_text, "Positive rational, e.g. 1, 3, 2/5")->required();
  quadrature->add_flag("--build", build, "Generate and run the construction script");
  quadrature->add_option("--save-script", save_path, "Write the generated script to this path");

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  std::string suite = "all";
  verify_cmd->add_option("suite", suite, "identities, oracle, limits, constructions or all")
      ->check(CLI::IsMember({"identities", "oracle", "limits", "constructions", "all"}));

  auto* emit = app.add_subcommand("emit", "Write the golden construction scripts");
  std::string emit_dir = "scripts";
  emit->add_option("dir", emit_dir, "Destination directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  cfg.format = format == "kv" ? Format::kv : Format::text;
  cfg.angle_unit = angle_unit == "deg" ? AngleUnit::deg : AngleUnit::rad;
  cfg.tol_given = tol_opt->count() > 0;

  try {
    if (*solve) {
      if (!right && !general) throw DomainError("choose --right or --general");
      return cmd_solve(cfg, general, givens);
    }
    if (*eval) return cmd_eval(cfg, quantity, eval_args);
    if (*construct) return cmd_construct(cfg, script_path);
    if (*quadrature) return cmd_quadrature(cfg, q_text, build, save_path);
    if (*verify_cmd) return cmd_verify(cfg, suite);
    if (*emit) return cmd_emit(cfg, emit_dir);
  } catch (const OutOfRangeError& e) {
    std::cerr << "out of range: " << e.what() << "\n";
    return kExitRange;
  } catch (const ScriptFormatError& e) {
    std::cerr << "script error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConstructionError& e) {
    std::cerr << "construction failed at " << e.what() << "\n";
    return kExitFailure;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
