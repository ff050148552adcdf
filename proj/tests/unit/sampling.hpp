#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

#include "hypkit/disk.hpp"

namespace hypkit::testing {

// Deterministic sampler shared by the property tests.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = 20240611) : gen_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }

  // Uniform in the disk of Euclidean radius r_max.
  disk::DiskPoint disk_point(double r_max = 0.9) {
    const double r = r_max * std::sqrt(uniform(0.0, 1.0));
    return disk::DiskPoint(std::polar(r, uniform(-std::numbers::pi, std::numbers::pi)));
  }

  disk::IdealPoint ideal_point() { return disk::IdealPoint(uniform(-std::numbers::pi, std::numbers::pi)); }

  disk::Geodesic geodesic() {
    for (;;) {
      const disk::IdealPoint a = ideal_point(), b = ideal_point();
      if (disk::angular_gap(a, b) > 1e-3) return disk::Geodesic(a, b);
    }
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace hypkit::testing
