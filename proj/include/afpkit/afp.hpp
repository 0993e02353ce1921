#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "afpkit/brouwer.hpp"
#include "afpkit/convex_body.hpp"
#include "afpkit/eps_net.hpp"
#include "afpkit/seminorm.hpp"
#include "afpkit/types.hpp"

namespace afpkit {

/// Continuous self-map of a convex body, supplied as an evaluator.
/// iterate_power m marks maps whose m-th iterate is used when extracting an
/// honest fixed point from a trace.
struct SelfMap {
  PointMap evaluator;
  std::string label;
  std::optional<int> iterate_power;
};

struct AfpLevelRecord {
  int n = 0;
  double epsilon = 0.0;
  Vector u;                           // approximate fixed point at this level
  double rho_residual = 0.0;          // rho(u - f(u))
  std::vector<double> weak_residuals; // |<x*_k, u - f(u)>| per functional
  std::size_t net_size = 0;
  FixedPointResult solver;
  double solver_tol = 0.0;
  bool ok = false;
  std::string error;  // reason when ok is false
};

struct AfpTrace {
  std::vector<AfpLevelRecord> levels;

  bool all_ok() const {
    for (const auto& l : levels)
      if (!l.ok) return false;
    return !levels.empty();
  }
  const AfpLevelRecord& last_ok() const;
};

struct DecayPolicy {
  /// A value may exceed its predecessor by this factor...
  double slack = 1.5;
  /// ...plus this absolute floor, which keeps ratio tests meaningful once
  /// residuals reach the rounding noise of double arithmetic.
  double floor = 1e-12;
};

struct AfpConfig {
  std::uint64_t seed = 42;
  NetOptions net;
  GridOptions grid;
  SolveOptions solver;
  int audit_samples = 1000;      // self-map audit sample count
  double audit_refit_tol = 1e-6; // barycentric residual gate for the audit
  DecayPolicy decay;
  bool stop_on_level_failure = true;
};

/// Per-functional weak residuals |<x*_k, u - fu>| (unweighted).
std::vector<double> weak_residuals(const AdmissibleSeminorm& rho, const Vector& u,
                                   const Vector& fu);

/// The constructive driver: for each level n build the 1/n net, compose the
/// Schauder projection with f, solve the finite-dimensional fixed point
/// problem, and record u_n together with rho(u_n - f(u_n)) and the weak
/// residuals. Levels must be strictly increasing. The seminorm is audited
/// for admissibility and f for the self-map property before any level runs
/// (AdmissibilityFailure on the former). Level failures (NetOverflow,
/// NotConverged, UncoveredPoint) are recorded in the trace, which is always
/// returned; by default the run stops at the first failed level.
AfpTrace run_afp(const ConvexBody& body, const AdmissibleSeminorm& rho, const SelfMap& f,
                 const std::vector<int>& levels, const AfpConfig& config = {});

/// Sampled orbit-hull chain: A_0 is the hull of the truncated orbit of `a`,
/// A_{k+1} the hull of f applied to a sample of A_k. Image samples are the
/// generators of the next hull, so the sampled inclusion holds by
/// construction.
std::vector<ConvexBody> orbit_hull_chain(const SelfMap& f, const Vector& a, int depth,
                                         int samples, std::uint64_t seed);

/// Finite-dimensional fixed point extraction from the last trace level:
/// p = f^m(u) when iterate_power m is set, else p = u; accepted when
/// ||f(p) - p|| <= tol. Throws NotFound with the best residual otherwise.
Vector extract_fixed_point(const AfpTrace& trace, const SelfMap& f, double tol);

struct TraceAudit {
  bool residual_contract = true;  // rho_residual < 1/n + solver tol, each level
  bool weak_decay = true;         // nonincreasing per functional under the policy
  bool membership = true;         // every u_n re-fits into the body
  bool all_levels_ok = true;
  std::string detail;
  bool pass() const { return residual_contract && weak_decay && membership && all_levels_ok; }
};

TraceAudit audit_trace(const AfpTrace& trace, const ConvexBody& body,
                       const DecayPolicy& decay = {}, double membership_tol = 1e-8);

/// Shared decay check: every value at most slack * predecessor + floor, and
/// the last at most the first + floor. Columns are checked independently.
bool check_decay(const std::vector<std::vector<double>>& rows, const DecayPolicy& policy,
                 std::string* detail = nullptr);

}  // namespace afpkit
