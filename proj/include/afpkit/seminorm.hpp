#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "afpkit/convex_body.hpp"
#include "afpkit/types.hpp"

namespace afpkit {

/// A continuous linear functional x -> <coefficients, x> on R^d.
struct LinearFunctional {
  Vector coefficients;
  std::string label;
};

struct SeminormOptions {
  /// Absolute tolerance below which two generators count as indistinguishable.
  double separation_tol = 1e-10;
};

/// Weighted absolute sum rho(x) = sum_n c_n |<x*_n, x>| over a finite family
/// of functionals, rescaled so that each term is at most 2^{-(n+1)} on the
/// target body. Subadditive and absolutely homogeneous by construction;
/// separation on the body is certified at build time. Immutable, and
/// evaluation is pure, so instances may be shared across threads freely.
class AdmissibleSeminorm {
 public:
  AdmissibleSeminorm(std::vector<LinearFunctional> functionals,
                     std::vector<double> weights, double body_diameter_bound);

  /// rho(x). Throws DimensionMismatch if x has the wrong dimension.
  double operator()(const Vector& x) const;

  int dimension() const { return dimension_; }
  std::size_t size() const { return functionals_.size(); }
  const std::vector<LinearFunctional>& functionals() const { return functionals_; }
  const std::vector<double>& weights() const { return weights_; }

  /// Cached bound of rho on C - C for the body the seminorm was built
  /// against (at most 1 by the geometric series of the per-term bounds).
  double body_diameter_bound() const { return body_diameter_bound_; }

  /// Lipschitz constant of rho w.r.t. the Euclidean norm:
  /// sum_n c_n ||x*_n||_2.
  double euclidean_lipschitz() const { return euclidean_lipschitz_; }

  /// Indices of functionals that vanished on all generators at build time
  /// (their weight defaulted to 2^{-(n+1)}).
  const std::vector<std::size_t>& degenerate_indices() const { return degenerate_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  friend AdmissibleSeminorm build_admissible(const std::vector<LinearFunctional>&,
                                             const ConvexBody&, const SeminormOptions&);

  std::vector<LinearFunctional> functionals_;
  std::vector<double> weights_;
  double body_diameter_bound_;
  double euclidean_lipschitz_;
  int dimension_;
  std::vector<std::size_t> degenerate_;
  std::vector<std::string> warnings_;
};

/// Rescaled sum construction: weight c_n is chosen so that the n-th term is
/// at most 2^{-(n+1)} over the body's generators (n counted from 1), which
/// by convexity bounds it on the whole hull. Throws SeparationFailure if two
/// distinct generators are indistinguishable by every functional, EmptyInput
/// if either argument is empty.
AdmissibleSeminorm build_admissible(const std::vector<LinearFunctional>& functionals,
                                    const ConvexBody& body,
                                    const SeminormOptions& options = {});

struct SeminormAudit {
  bool pass = false;
  double max_subadditivity_violation = 0.0;  // rho(x+y) - rho(x) - rho(y)
  double max_homogeneity_violation = 0.0;    // | rho(l x) - |l| rho(x) | relative
  double max_rescale_excess = 0.0;           // c_n |<x*_n, g>| - 2^{-(n+1)}
  double min_generator_separation = 0.0;     // min rho(g_i - g_j), i != j
  std::string detail;
};

/// Randomized check of the admissibility axioms plus the rescaling bound on
/// all generators. `samples` (x, y, lambda) triples are drawn from `seed`.
SeminormAudit audit_admissible(const AdmissibleSeminorm& rho, const ConvexBody& body,
                               int samples, std::uint64_t seed, double tol = 1e-12);

}  // namespace afpkit
