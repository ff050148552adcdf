#pragma once

// Seeded property suites cross-checking the closed forms, the disk model
// and the construction engine against one another.

#include <cstdint>
#include <string>
#include <vector>

#include "hypkit/disk.hpp"
#include "hypkit/units.hpp"

namespace hypkit::verify {

struct Check {
  std::string suite;
  std::string property;
  std::size_t samples = 0;
  double max_residual = 0.0;
  double tol = 0.0;
  bool passed = false;
  std::string note;
};

struct Options {
  std::uint64_t seed = 42;
  Curvature k{1.0};
};

/// identities, oracle, limits, constructions
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws DomainError for an unknown name.
std::vector<Check> run_suite(const std::string& name, const Options& options);

/// Residuals of the Euclidean limits at radius r for one value of k / r.
struct LimitRow {
  double k_over_r;
  double circumference;  // |C / (2 pi r) - 1|
  double area;           // |A / (pi r^2) - 1|
  double volume;         // |V / (4/3 pi r^3) - 1|
  double angle_sum;      // pi/2 - alpha - beta for the isosceles right triangle with legs r
};

std::vector<LimitRow> limit_table(const std::vector<double>& k_over_r);

/// Least-squares slope of log(residual) against log(r / k).
double fitted_order(const std::vector<double>& k_over_r, const std::vector<double>& residuals);

/// Area of the geodesic triangle abc by Gauss-Legendre quadrature of the
/// disk's area element 4 / (1 - |z|^2)^2, in polar coordinates about the
/// sharpest vertex moved to the origin.
double integrate_triangle_area(const disk::DiskPoint& a, const disk::DiskPoint& b, const disk::DiskPoint& c,
                               int panels = 16);

}  // namespace hypkit::verify
