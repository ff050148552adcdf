#include "hypkit/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>

#include "hypkit/error.hpp"

namespace hypkit {

namespace {

using Fn = double (*)(double);

const std::map<std::string, Fn>& functions() {
  static const std::map<std::string, Fn> table{
      {"sin", [](double x) { return std::sin(x); }},     {"cos", [](double x) { return std::cos(x); }},
      {"tan", [](double x) { return std::tan(x); }},     {"asin", [](double x) { return std::asin(x); }},
      {"acos", [](double x) { return std::acos(x); }},   {"atan", [](double x) { return std::atan(x); }},
      {"sinh", [](double x) { return std::sinh(x); }},   {"cosh", [](double x) { return std::cosh(x); }},
      {"tanh", [](double x) { return std::tanh(x); }},   {"asinh", [](double x) { return std::asinh(x); }},
      {"acosh", [](double x) { return std::acosh(x); }}, {"atanh", [](double x) { return std::atanh(x); }},
      {"sqrt", [](double x) { return std::sqrt(x); }},   {"exp", [](double x) { return std::exp(x); }},
      {"ln", [](double x) { return std::log(x); }},      {"log", [](double x) { return std::log(x); }},
      {"cot", [](double x) { return 1.0 / std::tan(x); }},
  };
  return table;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  double parse() {
    const double v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

  bool saw_degrees() const noexcept { return degrees_; }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
  bool degrees_ = false;

  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("cannot parse '" + s_ + "' at position " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  double expr() {
    double v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  double term() {
    double v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        v /= unary();
      } else if (starts_primary()) {
        v *= power();
      } else {
        return v;
      }
    }
  }

  double unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  double power() {
    const double base = postfix();
    if (eat('^')) return std::pow(base, unary());
    return base;
  }

  double postfix() {
    double v = primary();
    skip();
    if (s_.compare(pos_, 3, "deg") == 0 && !ident_continues(pos_ + 3)) {
      pos_ += 3;
      degrees_ = true;
      v *= std::numbers::pi / 180.0;
    } else if (pos_ < s_.size() && s_[pos_] == 'd' && !ident_continues(pos_ + 1)) {
      ++pos_;
      degrees_ = true;
      v *= std::numbers::pi / 180.0;
    }
    return v;
  }

  bool ident_continues(std::size_t at) const {
    return at < s_.size() && std::isalpha(static_cast<unsigned char>(s_[at]));
  }

  double number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    // Exponent only when followed by digits, so "2e" is 2 times e.
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t q = pos_ + 1;
      if (q < s_.size() && (s_[q] == '+' || s_[q] == '-')) ++q;
      if (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) {
        pos_ = q;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
    }
    double v = 0.0;
    const auto [end, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc() || end != s_.data() + pos_) {
      pos_ = start;
      fail("malformed number");
    }
    return v;
  }

  double primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      const double v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");

    // Longest known name at this position, so "pie" reads as pi * e.
    std::size_t end = pos_;
    while (end < s_.size() && std::isalpha(static_cast<unsigned char>(s_[end]))) ++end;
    for (std::size_t len = end - pos_; len > 0; --len) {
      const std::string name = s_.substr(pos_, len);
      if (name == "pi") {
        pos_ += len;
        return std::numbers::pi;
      }
      if (name == "e") {
        pos_ += len;
        return std::numbers::e;
      }
      const auto it = functions().find(name);
      if (it != functions().end()) {
        pos_ += len;
        return it->second(postfix_argument());
      }
    }
    fail("unknown name '" + s_.substr(pos_, end - pos_) + "'");
  }

  // "f(x)^2" is (f x)^2; an unparenthesized argument takes a signed postfix term.
  double postfix_argument() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '(') return primary();
    if (eat('-')) return -postfix_argument();
    if (eat('+')) return postfix_argument();
    return postfix();
  }
};

}  // namespace

double evaluate_expression(const std::string& text) {
  Parser p(text);
  const double v = p.parse();
  if (!std::isfinite(v)) throw DomainError("'" + text + "' does not evaluate to a finite number");
  return v;
}

double evaluate_angle(const std::string& text, AngleUnit unit) {
  Parser p(text);
  const double v = p.parse();
  if (!std::isfinite(v)) throw DomainError("'" + text + "' does not evaluate to a finite number");
  if (unit == AngleUnit::deg && !p.saw_degrees()) return v * std::numbers::pi / 180.0;
  return v;
}

}  // namespace hypkit
