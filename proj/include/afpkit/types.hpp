#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace afpkit {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Deterministic random source. All sampling in the library goes through
/// this class so that a given seed reproduces the same stream bit-for-bit,
/// independent of the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform draw in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Exp(1) via inversion.
  double exponential() { return -std::log1p(-uniform01()); }

  /// Standard normal via Box-Muller (one value per call, second discarded).
  double gaussian() {
    double u = uniform01();
    while (u <= 0.0) u = uniform01();
    const double v = uniform01();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925286766559 * v);
  }

  /// Dirichlet(1,...,1) weights: a uniform point of the standard simplex.
  std::vector<double> dirichlet_uniform(std::size_t count) {
    std::vector<double> w(count);
    double sum = 0.0;
    for (auto& wi : w) {
      wi = exponential();
      sum += wi;
    }
    if (sum <= 0.0) {
      for (auto& wi : w) wi = 1.0 / static_cast<double>(count);
      return w;
    }
    for (auto& wi : w) wi /= sum;
    return w;
  }

  std::uint64_t raw() { return gen_(); }

 private:
  // xorshift-free: mt19937_64 is seeded identically everywhere, and we only
  // consume raw 64-bit words above, so streams are reproducible across builds.
  std::mt19937_64 gen_;
};

}  // namespace afpkit
