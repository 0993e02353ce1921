#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "afpkit/eps_net.hpp"
#include "afpkit/types.hpp"

namespace afpkit {

using PointMap = std::function<Vector(const Vector&)>;

enum class FixedPointMethod { damped_iteration, multistart_minimization, grid_oracle };

const char* to_string(FixedPointMethod m);

struct FixedPointResult {
  Vector point;                     // in the hull of the net
  std::vector<double> barycentric;  // weights of `point` over the net points
  double residual_norm = 0.0;       // Euclidean ||map(point) - point||
  int iterations = 0;               // accepted damping steps / NM evaluations
  FixedPointMethod method = FixedPointMethod::damped_iteration;
  bool converged = false;           // residual_norm <= tol; NotConverged otherwise
};

struct SolveOptions {
  int budget = 2000;           // map evaluation cap
  std::uint64_t seed = 0;
  int dirichlet_starts = 8;    // seeded extra starts for the multistart phase
  int net_vertex_starts = 8;   // net points used as multistart seeds (capped)
  double refit_tol = 1e-6;     // barycentric re-fit residual gate on map outputs
  double min_damping = 1e-3;   // backtracking floor before escalation
};

/// Brouwer default tolerance: the solver residual must be negligible against
/// the net-radius residual contract.
inline double default_brouwer_tol(double epsilon) {
  return std::min(1e-8, epsilon / 100.0);
}

/// Fixed point of a continuous self-map of the hull of the net, in
/// barycentric coordinates. Damped iteration z <- (1-l) z + l map(z) with
/// backtracking on l, escalating to multistart Nelder-Mead minimization of
/// the residual over the barycentric simplex. Deterministic given the seed;
/// multistart candidates are merged by an ordered reduction (lowest residual,
/// then lowest start index). Every map output is re-fit barycentrically;
/// MapLeavesHull if the fit residual exceeds options.refit_tol. The result is
/// flagged converged=false when the budget runs out (NotConverged).
FixedPointResult solve_fixed_point(const PointMap& map, const EpsNet& net, double tol,
                                   const SolveOptions& options = {});

inline FixedPointResult solve_fixed_point(const PointMap& map, const EpsNet& net,
                                          double tol, int budget, std::uint64_t seed) {
  SolveOptions o;
  o.budget = budget;
  o.seed = seed;
  return solve_fixed_point(map, net, tol, o);
}

/// Brute-force validation oracle: the barycentric grid point (all weight
/// vectors k/resolution) minimizing ||map(z) - z||. Enumeration order is
/// fixed and ties keep the first minimum, so the result is deterministic.
/// Throws DimensionTooHigh when the affine dimension of the net exceeds 3.
Vector grid_oracle(const PointMap& map, const EpsNet& net, int resolution);

/// Spatial step of the oracle grid, diameter(net)/resolution.
double grid_oracle_spacing(const EpsNet& net, int resolution);

/// Affine dimension of a point set (rank of the difference matrix).
int affine_dimension(const std::vector<Vector>& points, double tol = 1e-9);

/// Euclidean projection of v onto the standard simplex {w >= 0, sum w = 1}.
Vector simplex_project(const Vector& v);

}  // namespace afpkit
