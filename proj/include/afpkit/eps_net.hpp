#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "afpkit/convex_body.hpp"
#include "afpkit/seminorm.hpp"
#include "afpkit/types.hpp"

namespace afpkit {

struct NetOptions {
  /// Safety margin shrinking the effective coverage radius: the greedy loop
  /// runs until every grid point is within rho-distance < epsilon*(1-margin)
  /// of a net point, so the margin absorbs grid dispersion.
  double margin = 0.1;
  std::size_t max_points = 4096;
  double membership_tol = 1e-8;
};

/// Finite subset of the body whose rho-balls of radius epsilon cover it
/// (certified on the construction grid). Immutable after construction.
class EpsNet {
 public:
  EpsNet(std::vector<Vector> points, double epsilon, AdmissibleSeminorm rho);

  const std::vector<Vector>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  double epsilon() const { return epsilon_; }
  const AdmissibleSeminorm& rho() const { return rho_; }
  int dimension() const { return rho_.dimension(); }

  /// Euclidean diameter of the net points.
  double diameter() const;

  /// rho-distance from x to the nearest net point.
  double distance_to(const Vector& x) const;

  /// One point per row; epsilon recorded in a comment line.
  void write_csv(std::ostream& os) const;

 private:
  std::vector<Vector> points_;
  double epsilon_;
  AdmissibleSeminorm rho_;
};

/// Greedy farthest-point selection over `grid` until every grid point is
/// covered within epsilon*(1-margin). The start point is grid[0]; ties in
/// the farthest-point step break to the lowest grid index, so the result is
/// a pure function of its arguments. Net points are certified members of
/// the body. Throws NetOverflow when the cap is exceeded.
EpsNet build_eps_net(const ConvexBody& body, const AdmissibleSeminorm& rho,
                     double epsilon, const std::vector<Vector>& grid,
                     const NetOptions& options = {});

struct CoverageReport {
  double max_min_distance = 0.0;   // worst rho-distance to the net
  double uncovered_fraction = 0.0; // fraction of points at distance >= radius
  std::size_t checked = 0;
};

/// Independent linear scan: rho-distance of every point to the net.
CoverageReport check_coverage(const EpsNet& net, const std::vector<Vector>& points,
                              double radius);

struct GridOptions {
  /// Seeded interior samples placed at the front of the grid; they give the
  /// greedy start a generic location and break symmetric ties.
  int jitter_count = 64;
  /// Lattice cap; above it the grid falls back to random samples.
  std::size_t max_lattice_points = 200000;
  int fallback_samples = 8192;
  std::uint64_t seed = 0;
  double membership_tol = 1e-8;
};

/// Construction grid for build_eps_net: seeded jitter samples, then a
/// bounding-box lattice (filtered to the body) whose pitch keeps the
/// rho-dispersion below margin*epsilon/2, then the generators. Falls back
/// to Dirichlet samples when the lattice would exceed the cap.
std::vector<Vector> make_net_grid(const ConvexBody& body, const AdmissibleSeminorm& rho,
                                  double epsilon, double margin,
                                  const GridOptions& options = {});

}  // namespace afpkit
