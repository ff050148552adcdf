#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypkit {

// Input outside an operation's mathematical domain (negative length,
// obtuse parallelism angle, angle sum too large for the hyperbolic plane...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An exponential argument x/k beyond the representable range.
class OutOfRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A construction step that cannot be carried out (missing object,
// empty intersection, name collision).
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(std::size_t step, const std::string& what)
      : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

// A script file that does not follow the script schema.
class ScriptFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hypkit
