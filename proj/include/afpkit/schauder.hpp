#pragma once

#include <vector>

#include "afpkit/eps_net.hpp"
#include "afpkit/types.hpp"

namespace afpkit {

/// Partition function g(x) = max{epsilon - rho(x - p), 0}; value in [0, epsilon].
double partition_value(const AdmissibleSeminorm& rho, double epsilon, const Vector& p,
                       const Vector& x);

/// Projection onto the convex hull of an eps-net:
///   P(x) = sum_i g_i(x) x_i / sum_i g_i(x),
/// with g_i the partition functions of the net points. Every covered point
/// satisfies rho(P(x) - x) < epsilon, since only net points with
/// rho(x_i - x) < epsilon contribute. Pure and safe to call concurrently.
class SchauderProjection {
 public:
  explicit SchauderProjection(EpsNet net) : net_(std::move(net)) {}

  /// Normalized partition weights at x (nonnegative, sum 1). Throws
  /// UncoveredPoint when the total mass falls below the underflow guard.
  std::vector<double> weights(const Vector& x) const;

  Vector operator()(const Vector& x) const;

  const EpsNet& net() const { return net_; }

 private:
  EpsNet net_;
};

}  // namespace afpkit
