#pragma once

// Straightedge-and-compass engine over the disk model.
//
// A Script names its given objects (params), then applies primitive steps,
// each creating exactly one or two new named objects. No coordinates enter
// after the params; every object is derivable by replaying the step log.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hypkit/disk.hpp"

namespace hypkit {

enum class ParamKind { point, ideal, length, angle };

struct Param {
  std::string name;
  ParamKind kind;
  std::vector<double> value;  // [u, v] for points, one entry otherwise
  std::string certificate;    // constructibility note for angles
};

/// Intersection selector, or which end of a line, or which side of a ray.
enum class Selector { none, only, first, second, start, end, left, right };

struct Step {
  std::string op;
  std::vector<std::string> args;  // outputs first
  Selector selector = Selector::none;
};

/// An assertion argument: an object name or a number.
using AssertArg = std::variant<std::string, double>;

struct Assertion {
  std::string predicate;
  std::vector<AssertArg> args;
  double tol = 1e-9;
};

struct Script {
  std::string name;
  std::vector<Param> params;
  std::vector<Step> steps;
  std::vector<Assertion> asserts;
  std::vector<std::string> outputs;
};

enum class LineKind { line, ray, segment };

/// A geodesic drawn as a full line, a ray from `from`, or a segment.
struct LineObject {
  disk::Geodesic geodesic;
  LineKind kind;
  disk::AnyPoint from;
  disk::AnyPoint to;
};

struct Scalar {
  ParamKind kind;  // length or angle
  double value;
  std::string certificate;
};

using Object = std::variant<disk::AnyPoint, LineObject, disk::CurveObject, Scalar>;

/// Named objects in creation order plus the log that produced them.
class ConstructionState {
 public:
  bool contains(const std::string& name) const { return index_.count(name) != 0; }
  const Object& at(const std::string& name) const;
  /// Throws DomainError on a duplicate or malformed name.
  void add(const std::string& name, Object object);

  const std::vector<std::pair<std::string, Object>>& objects() const noexcept { return objects_; }
  const Script& log() const noexcept { return log_; }
  Script& log() noexcept { return log_; }

  disk::AnyPoint point(const std::string& name) const;
  disk::DiskPoint interior_point(const std::string& name) const;
  disk::IdealPoint ideal_point(const std::string& name) const;
  const LineObject& line(const std::string& name) const;
  disk::Shape shape(const std::string& name) const;
  const Scalar& scalar(const std::string& name, ParamKind kind) const;

 private:
  std::vector<std::pair<std::string, Object>> objects_;
  std::map<std::string, std::size_t> index_;
  Script log_;
};

bool valid_name(const std::string& name);

/// Candidate points of an intersection in selector order.
std::vector<disk::DiskPoint> intersection_candidates(const ConstructionState& state, const std::string& a,
                                                     const std::string& b);

/// Creates the param object in `state` (no log entry).
void seed_param(ConstructionState& state, const Param& param);

/// Applies one step, appending it to the log. `index` locates errors.
void apply_step(ConstructionState& state, const Step& step, std::size_t index);

struct AssertionResult {
  std::string label;
  double expected = 0.0;
  double measured = 0.0;
  double residual = 0.0;
  double tol = 0.0;
  bool passed = false;
  std::string note;
};

struct Report {
  std::vector<AssertionResult> results;
  bool passed() const;
};

AssertionResult evaluate(const ConstructionState& state, const Assertion& assertion);

struct RunResult {
  ConstructionState state;
  Report report;
};

/// Executes the script on top of `seed`, which is returned unchanged by an
/// empty script. Params already present in `seed` take precedence over the
/// script's own values and are logged with the seed's value. Step failures
/// throw ConstructionError located by 1-based step index (0 for params);
/// assertion failures are reported, never thrown.
RunResult run(const Script& script, const ConstructionState& seed = {});

/// Re-executes the state's log from its params. Objects added to a seed
/// without going through a log are not reproduced.
ConstructionState replay(const ConstructionState& state);

const char* to_string(Selector s);
Selector selector_from_string(const std::string& text);
const char* to_string(ParamKind k);
ParamKind param_kind_from_string(const std::string& text);

}  // namespace hypkit
