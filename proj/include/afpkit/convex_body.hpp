#pragma once

#include <cstdint>
#include <vector>

#include "afpkit/types.hpp"

namespace afpkit {

struct BarycentricFit {
  Vector weights;   // nonnegative, normalized to sum 1
  double residual;  // ||sum_i w_i g_i - x||_2 after normalization
  double raw_sum;   // sum of the unnormalized NNLS weights
};

/// Compact convex set given by its generators (V-representation): the body
/// is exactly the convex hull of the generator points. Immutable after
/// construction; all queries are safe to call concurrently.
class ConvexBody {
 public:
  explicit ConvexBody(std::vector<Vector> generators);

  int dimension() const { return dimension_; }
  const std::vector<Vector>& generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }

  /// `count` random convex combinations of the generators, with
  /// Dirichlet-uniform weights drawn from `seed`. Deterministic.
  std::vector<Vector> sample(int count, std::uint64_t seed) const;

  /// Nonnegative-least-squares barycentric fit of x against the generators.
  BarycentricFit barycentric_fit(const Vector& x) const;

  /// Hull membership via the barycentric fit residual.
  bool contains(const Vector& x, double tol = 1e-8) const;

  Vector centroid() const;
  /// Euclidean diameter of the generator set (equals the hull diameter).
  double diameter() const;
  Vector box_min() const { return box_min_; }
  Vector box_max() const { return box_max_; }

 private:
  std::vector<Vector> generators_;
  int dimension_;
  Vector box_min_, box_max_;
  Matrix gen_matrix_;        // d x m, columns are generators
  Matrix fit_matrix_;        // (d+1) x m, generators plus the sum-to-one row
  double fit_row_scale_;
};

/// Barycentric fit of x against an arbitrary point set (columns of `points`).
BarycentricFit barycentric_fit_points(const Matrix& points, const Vector& x);

}  // namespace afpkit
