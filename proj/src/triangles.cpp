#include "hypkit/triangles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "hypkit/core_trig.hpp"

namespace hypkit {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double kConsistencyTol = 1e-9;

double relative_gap(double x, double y) {
  const double scale = std::max({std::abs(x), std::abs(y), 1e-300});
  return std::abs(x - y) / scale;
}

double require_positive_scaled(const Length& len, const Curvature& k, const char* what) {
  if (len.value() <= 0.0) throw DomainError(std::string(what) + " must be positive");
  return detail::scaled(len.value(), k);
}

double require_acute(const Angle& angle, const char* what) {
  const double r = angle.radians();
  if (r <= 0.0 || r >= pi / 2.0) throw DomainError(std::string(what) + " must lie strictly between 0 and pi/2");
  return r;
}

// acosh(cosh(x) cosh(y)) for scaled legs.
double hypotenuse_from_legs(double x, double y) {
  if (x + y > 40.0) {
    return x + y - std::log(2.0) + std::log1p(std::exp(-2.0 * x)) + std::log1p(std::exp(-2.0 * y));
  }
  const double ch = std::cosh(x);
  const double sx = std::sinh(x);
  const double sy = std::sinh(y);
  return std::asinh(std::sqrt(ch * ch * sy * sy + sx * sx));
}

// Leg y from leg x and hypotenuse h (scaled), cosh y = cosh h / cosh x.
double leg_from_leg_hypotenuse(double x, double h) {
  double excess;  // cosh h / cosh x - 1
  if (h > 40.0) {
    excess = std::expm1((h - x) + std::log1p(std::exp(-2.0 * h)) - std::log1p(std::exp(-2.0 * x)));
  } else {
    excess = 2.0 * std::sinh((h + x) / 2.0) * std::sinh((h - x) / 2.0) / std::cosh(x);
  }
  return detail::acosh_one_plus(excess);
}

RightTriangle from_scaled_legs(double x, double y, const Curvature& k) {
  const double kv = k.value();
  const double h = hypotenuse_from_legs(x, y);
  // tan alpha = tanh a / sinh b, a consequence of (I) and (II).
  const double alpha = std::atan2(std::tanh(x), std::sinh(y));
  const double beta = std::atan2(std::tanh(y), std::sinh(x));
  return RightTriangle{Length(x * kv), Length(y * kv), Length(h * kv), Angle(alpha), Angle(beta), k};
}

// cosh(leg opposite `opposite`) - 1 from the two acute angles, via (II):
// cosh a = cos alpha / sin beta.
double leg_excess_from_angles(double opposite, double adjacent) {
  const double num = 2.0 * std::sin((opposite - adjacent + pi / 2.0) / 2.0) *
                     std::sin((pi / 2.0 - opposite - adjacent) / 2.0);
  return num / std::sin(adjacent);
}

void check_consistent(const std::optional<Length>& given, const Length& solved, const char* name) {
  if (given && relative_gap(given->value(), solved.value()) > kConsistencyTol) {
    throw DomainError(std::string("contradictory givens: ") + name + " does not match the other elements");
  }
}

void check_consistent(const std::optional<Angle>& given, const Angle& solved, const char* name) {
  if (given && relative_gap(given->radians(), solved.radians()) > kConsistencyTol) {
    throw DomainError(std::string("contradictory givens: ") + name + " does not match the other elements");
  }
}

RightTriangle swap_legs(const RightTriangle& t) { return RightTriangle{t.b, t.a, t.c, t.beta, t.alpha, t.k}; }

// Solves from exactly the pair present in `g` that comes first in the
// dispatch order. Callers check the remaining givens.
RightTriangle solve_pair(const RightTriangleGivens& g, const Curvature& k) {
  const bool a = g.a.has_value(), b = g.b.has_value(), c = g.c.has_value();
  const bool al = g.alpha.has_value(), be = g.beta.has_value();

  if (a && b) {
    return from_scaled_legs(require_positive_scaled(*g.a, k, "leg a"), require_positive_scaled(*g.b, k, "leg b"), k);
  }
  if ((a || b) && c) {
    // Mirror {b, c} onto {a, c}.
    const bool mirrored = !a;
    const double x = require_positive_scaled(mirrored ? *g.b : *g.a, k, "leg");
    const double h = require_positive_scaled(*g.c, k, "hypotenuse c");
    if (h <= x) throw DomainError("hypotenuse must be longer than either leg");
    const double y = leg_from_leg_hypotenuse(x, h);
    RightTriangle t = from_scaled_legs(x, y, k);
    return mirrored ? swap_legs(t) : t;
  }
  if ((a && al) || (b && be)) {
    // Leg and its opposite angle: tan alpha = tanh a / sinh b.
    const bool mirrored = !(a && al);
    const double x = require_positive_scaled(mirrored ? *g.b : *g.a, k, "leg");
    const double opp = require_acute(mirrored ? *g.beta : *g.alpha, "angle");
    const double y = std::asinh(std::tanh(x) / std::tan(opp));
    RightTriangle t = from_scaled_legs(x, y, k);
    return mirrored ? swap_legs(t) : t;
  }
  if ((a && be) || (b && al)) {
    // Leg and adjacent angle: tan beta = tanh b / sinh a.
    const bool mirrored = !(a && be);
    const double x = require_positive_scaled(mirrored ? *g.b : *g.a, k, "leg");
    const double adj = require_acute(mirrored ? *g.alpha : *g.beta, "angle");
    const double t = std::tan(adj) * std::sinh(x);
    if (t >= 1.0) throw DomainError("no right triangle: the adjacent angle reaches the angle of parallelism of the leg");
    const double y = std::atanh(t);
    RightTriangle tri = from_scaled_legs(x, y, k);
    return mirrored ? swap_legs(tri) : tri;
  }
  if (c && (al || be)) {
    // Hypotenuse and an angle: sin alpha = sinh a / sinh c, cos alpha = tanh b / tanh c.
    const bool mirrored = !al;
    const double h = require_positive_scaled(*g.c, k, "hypotenuse c");
    const double ang = require_acute(mirrored ? *g.beta : *g.alpha, "angle");
    const double x = std::asinh(std::sinh(h) * std::sin(ang));
    const double y = std::atanh(std::tanh(h) * std::cos(ang));
    RightTriangle t = from_scaled_legs(x, y, k);
    return mirrored ? swap_legs(t) : t;
  }
  if (al && be) {
    const double alpha = require_acute(*g.alpha, "alpha");
    const double beta = require_acute(*g.beta, "beta");
    if (alpha + beta >= pi / 2.0) {
      throw DomainError("alpha + beta must be below pi/2: a right triangle needs a positive defect");
    }
    const double x = detail::acosh_one_plus(leg_excess_from_angles(alpha, beta));
    const double y = detail::acosh_one_plus(leg_excess_from_angles(beta, alpha));
    return from_scaled_legs(x, y, k);
  }
  throw DomainError("insufficient givens: need two elements of a right triangle (not the hypotenuse alone)");
}

// log(sinh x) for x > 0.
double log_sinh(double x) { return x + std::log(-std::expm1(-2.0 * x)) - std::log(2.0); }

// Angle opposite side x from the three scaled sides (half-angle formula).
double angle_from_sides(double x, double y, double z) {
  const double s = (x + y + z) / 2.0;
  const double log_tan2 = log_sinh(s - y) + log_sinh(s - z) - log_sinh(s) - log_sinh(s - x);
  return 2.0 * std::atan(std::exp(0.5 * log_tan2));
}

// Side opposite angle A from three angles (half-side formula):
// sinh^2(a/2) = cos S cos(S - A) / (sin B sin C), S = (A+B+C)/2.
double side_from_angles(double A, double B, double C) {
  const double defect = pi - A - B - C;
  const double cos_s = std::sin(defect / 2.0);
  const double cos_s_minus_a = std::cos((B + C - A) / 2.0);
  const double sh2 = cos_s * cos_s_minus_a / (std::sin(B) * std::sin(C));
  return 2.0 * std::asinh(std::sqrt(std::max(0.0, sh2)));
}

GeneralTriangle from_scaled_sides(double x, double y, double z, const Curvature& k) {
  if (x <= 0.0 || y <= 0.0 || z <= 0.0) throw DomainError("triangle sides must be positive");
  if (x >= y + z || y >= x + z || z >= x + y) throw DomainError("sides violate the triangle inequality");
  const double kv = k.value();
  return GeneralTriangle{Length(x * kv),
                         Length(y * kv),
                         Length(z * kv),
                         Angle(angle_from_sides(x, y, z)),
                         Angle(angle_from_sides(y, z, x)),
                         Angle(angle_from_sides(z, x, y)),
                         k};
}

GeneralTriangle rotate_back(const GeneralTriangle& t, int shift) {
  // Canonical slot order (a, b, c) was taken from caller slots
  // (shift, shift+1, shift+2) mod 3; undo it.
  const Length sides[3] = {t.a, t.b, t.c};
  const Angle angles[3] = {t.A, t.B, t.C};
  auto side = [&](int caller) { return sides[((caller - shift) % 3 + 3) % 3]; };
  auto angle = [&](int caller) { return angles[((caller - shift) % 3 + 3) % 3]; };
  return GeneralTriangle{side(0), side(1), side(2), angle(0), angle(1), angle(2), t.k};
}

}  // namespace

double RightTriangle::defect() const { return pi / 2.0 - alpha.radians() - beta.radians(); }

double RightTriangle::area() const { return k.value() * k.value() * defect(); }

double GeneralTriangle::defect() const { return pi - A.radians() - B.radians() - C.radians(); }

double GeneralTriangle::area() const { return k.value() * k.value() * defect(); }

RightTriangle solve_right_triangle(const RightTriangleGivens& givens, Curvature k) {
  const int count = int(givens.a.has_value()) + int(givens.b.has_value()) + int(givens.c.has_value()) +
                    int(givens.alpha.has_value()) + int(givens.beta.has_value());
  if (count < 2) throw DomainError("insufficient givens: need two elements of a right triangle");

  RightTriangle t = solve_pair(givens, k);
  check_consistent(givens.a, t.a, "a");
  check_consistent(givens.b, t.b, "b");
  check_consistent(givens.c, t.c, "c");
  check_consistent(givens.alpha, t.alpha, "alpha");
  check_consistent(givens.beta, t.beta, "beta");
  return t;
}

double RightTriangleResiduals::max() const {
  return std::max({sine_rule, cosine_rule, pythagoras, sinh_variant, cot_product});
}

RightTriangleResiduals right_triangle_residuals(const RightTriangle& t) {
  const double kv = t.k.value();
  const double a = t.a.value() / kv, b = t.b.value() / kv, c = t.c.value() / kv;
  const double al = t.alpha.radians(), be = t.beta.radians();
  RightTriangleResiduals r{};
  r.sine_rule = std::max(relative_gap(std::sin(al) * std::sinh(c), std::sinh(a)),
                         relative_gap(std::sin(be) * std::sinh(c), std::sinh(b)));
  r.cosine_rule = std::max(relative_gap(std::cos(al), std::cosh(a) * std::sin(be)),
                           relative_gap(std::cos(be), std::cosh(b) * std::sin(al)));
  r.pythagoras = relative_gap(std::cosh(c), std::cosh(a) * std::cosh(b));
  const double sc = std::sinh(c), ca = std::cosh(a), sb = std::sinh(b), sa = std::sinh(a);
  r.sinh_variant = relative_gap(sc * sc, ca * ca * sb * sb + sa * sa);
  r.cot_product = relative_gap(1.0 / (std::tan(al) * std::tan(be)), std::cosh(c));
  return r;
}

GeneralTriangle solve_general_triangle(const GeneralTriangleGivens& g, Curvature k) {
  const std::optional<Length> sides[3] = {g.a, g.b, g.c};
  const std::optional<Angle> angles[3] = {g.A, g.B, g.C};
  const int n_sides = int(g.a.has_value()) + int(g.b.has_value()) + int(g.c.has_value());
  const int n_angles = int(g.A.has_value()) + int(g.B.has_value()) + int(g.C.has_value());

  GeneralTriangle result = [&]() -> GeneralTriangle {
    if (n_sides == 3) {
      return from_scaled_sides(detail::scaled(g.a->value(), k), detail::scaled(g.b->value(), k),
                               detail::scaled(g.c->value(), k), k);
    }
    if (n_angles == 3) {
      const double A = g.A->radians(), B = g.B->radians(), C = g.C->radians();
      if (A <= 0.0 || B <= 0.0 || C <= 0.0) throw DomainError("zero angles put a vertex at infinity: sides unbounded");
      if (A + B + C >= pi) throw DomainError("angle sum must be below pi in the hyperbolic plane");
      const double x = side_from_angles(A, B, C);
      const double y = side_from_angles(B, C, A);
      const double z = side_from_angles(C, A, B);
      const double kv = k.value();
      return GeneralTriangle{Length(x * kv), Length(y * kv), Length(z * kv), *g.A, *g.B, *g.C, k};
    }
    // SAS: angle at slot i with both other sides known.
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, l = (i + 2) % 3;
      if (angles[i] && sides[j] && sides[l]) {
        const double y = detail::scaled(sides[j]->value(), k);
        const double z = detail::scaled(sides[l]->value(), k);
        if (y <= 0.0 || z <= 0.0) throw DomainError("triangle sides must be positive");
        detail::scaled(sides[j]->value() + sides[l]->value(), k);
        const double A = angles[i]->radians();
        if (A <= 0.0 || A >= pi) throw DomainError("included angle must lie strictly between 0 and pi");
        const double sh = std::sinh((y - z) / 2.0);
        const double sa = std::sin(A / 2.0);
        const double x = detail::acosh_one_plus(2.0 * sh * sh + 2.0 * std::sinh(y) * std::sinh(z) * sa * sa);
        GeneralTriangle t = from_scaled_sides(x, y, z, k);
        t.A = *angles[i];
        return rotate_back(t, i);
      }
    }
    // ASA: side at slot i with both other angles known.
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, l = (i + 2) % 3;
      if (sides[i] && angles[j] && angles[l]) {
        const double x = detail::scaled(sides[i]->value(), k);
        if (x <= 0.0) throw DomainError("triangle sides must be positive");
        const double B = angles[j]->radians(), C = angles[l]->radians();
        if (B <= 0.0 || C <= 0.0 || B + C >= pi) throw DomainError("the two angles must be positive with sum below pi");
        // sin^2(A/2) = cos^2((B+C)/2) - sin B sin C sinh^2(a/2)
        const double half = std::sinh(x / 2.0);
        const double cb = std::cos((B + C) / 2.0);
        const double s2 = cb * cb - std::sin(B) * std::sin(C) * half * half;
        if (s2 <= 0.0) throw DomainError("no triangle: the side is too long for the two adjacent angles");
        const double A = 2.0 * std::asin(std::sqrt(std::min(1.0, s2)));
        const double sa = std::sin(A);
        const double y = std::asinh(std::sinh(x) * std::sin(B) / sa);
        const double z = std::asinh(std::sinh(x) * std::sin(C) / sa);
        const double kv = k.value();
        GeneralTriangle t{Length(x * kv), Length(y * kv), Length(z * kv), Angle(A), *angles[j], *angles[l], k};
        return rotate_back(t, i);
      }
    }
    throw DomainError("unsupported givens: need SSS, SAS, ASA or AAA");
  }();

  check_consistent(g.a, result.a, "a");
  check_consistent(g.b, result.b, "b");
  check_consistent(g.c, result.c, "c");
  check_consistent(g.A, result.A, "A");
  check_consistent(g.B, result.B, "B");
  check_consistent(g.C, result.C, "C");
  return result;
}

double GeneralTriangleResiduals::max() const { return std::max(law_of_cosines, sine_law); }

GeneralTriangleResiduals general_triangle_residuals(const GeneralTriangle& t) {
  const double kv = t.k.value();
  const double s[3] = {t.a.value() / kv, t.b.value() / kv, t.c.value() / kv};
  const double ang[3] = {t.A.radians(), t.B.radians(), t.C.radians()};
  GeneralTriangleResiduals r{};
  double lo = INFINITY, hi = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double y = s[(i + 1) % 3], z = s[(i + 2) % 3];
    const double rhs = std::cosh(y) * std::cosh(z) - std::sinh(y) * std::sinh(z) * std::cos(ang[i]);
    r.law_of_cosines = std::max(r.law_of_cosines, relative_gap(std::cosh(s[i]), rhs));
    const double ratio = std::sin(ang[i]) / std::sinh(s[i]);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  r.sine_law = (hi - lo) / hi;
  return r;
}

}  // namespace hypkit
