#include "hypkit/quadrature.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "hypkit/error.hpp"

namespace hypkit {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError("rational arithmetic overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw DomainError("rational arithmetic overflow");
  return out;
}

std::int64_t parse_int(std::string_view s, const std::string& whole) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) throw DomainError("not a rational number: '" + whole + "'");
  return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    return Rational(parse_int(std::string_view(text).substr(0, slash), text),
                    parse_int(std::string_view(text).substr(slash + 1), text));
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(parse_int(text, text), 1);
  const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const std::size_t places = text.size() - dot - 1;
  if (places > 15) throw DomainError("too many decimal places: '" + text + "'");
  std::int64_t den = 1;
  for (std::size_t i = 0; i < places; ++i) den *= 10;
  return Rational(parse_int(digits, text), den);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)), checked_mul(a.den_, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) { return a + Rational(-b.num_, b.den_); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("rational division by zero");
  return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
}

bool operator<(const Rational& a, const Rational& b) {
  return (a - b).num_ < 0;
}

std::vector<PrimePower> factorize(std::int64_t n) {
  if (n < 1) throw DomainError("factorize needs n >= 1");
  std::vector<PrimePower> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::string factorization_string(std::int64_t n) {
  std::ostringstream os;
  os << n << " = ";
  const auto factors = factorize(n);
  if (factors.empty()) os << "1";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) os << " * ";
    os << factors[i].prime;
    if (factors[i].exponent > 1) os << "^" << factors[i].exponent;
  }
  return os.str();
}

bool gauss_constructible(std::int64_t n) {
  if (n < 1) throw DomainError("gauss_constructible needs n >= 1");
  while (n % 2 == 0) n /= 2;
  for (const std::int64_t p : kFermatPrimes) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return n == 1;
}

bool admissible_tan2z(const Rational& q) {
  if (q.num() <= 0) throw DomainError("tan^2 z must be positive");
  return gauss_constructible(q.den());
}

Angle QuadraturePlan::v() const { return Angle(std::numbers::pi * v_over_pi.value()); }

QuadraturePlan plan(const Rational& q) {
  QuadraturePlan out;
  out.tan2z = q;
  out.admissible = admissible_tan2z(q);
  out.target_area_over_k2 = std::numbers::pi * q.value();
  if (!out.admissible) {
    out.outcome = PlanOutcome::inadmissible;
    out.certificate = "denominator " + factorization_string(q.den()) + " is not a power of 2 times distinct Fermat primes";
    return out;
  }
  for (int n = 3; n <= kPolygonSearchBound; ++n) {
    const Rational v_over_pi = (Rational(n - 2) - q) / Rational(n);
    if (!(Rational(0) < v_over_pi)) continue;
    const Rational turn = v_over_pi / Rational(2);  // v / (2 pi)
    if (!gauss_constructible(turn.den())) continue;
    out.outcome = PlanOutcome::planned;
    out.n = n;
    out.v_over_pi = v_over_pi;
    out.certificate = "tan^2 z denominator " + factorization_string(q.den()) + "; v/(2 pi) = " + turn.str() +
                      ", denominator " + factorization_string(turn.den()) + "; central angle 2 pi/" +
                      std::to_string(n) + ", " + factorization_string(n);
    return out;
  }
  out.outcome = PlanOutcome::unplanned;
  out.certificate = "no n <= " + std::to_string(kPolygonSearchBound) + " gives a constructible positive angle";
  return out;
}

PolygonDimensions polygon_dimensions(int n, Angle v, Curvature k) {
  const double pi = std::numbers::pi;
  if (n < 3) throw DomainError("a polygon needs at least 3 sides");
  if (!(v.radians() > 0.0) || !(v.radians() < (n - 2) * pi / n)) {
    throw DomainError("interior angle must lie strictly between 0 and (n-2) pi / n");
  }
  RightTriangleGivens g;
  g.alpha = Angle(pi / n);
  g.beta = Angle(v.radians() / 2.0);
  const RightTriangle t = solve_right_triangle(g, k);
  return PolygonDimensions{t.c, t.b, Length(2.0 * t.a.value()), t};
}

Length quadrature_circle_radius(double tan2z, Curvature k) {
  if (!(tan2z > 0.0) || !std::isfinite(tan2z)) throw DomainError("tan^2 z must be positive");
  return Length(2.0 * k.value() * std::asinh(std::sqrt(tan2z) / 2.0));
}

}  // namespace hypkit
