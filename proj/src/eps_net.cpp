#include "afpkit/eps_net.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "afpkit/errors.hpp"
#include "afpkit/io.hpp"

namespace afpkit {

EpsNet::EpsNet(std::vector<Vector> points, double epsilon, AdmissibleSeminorm rho)
    : points_(std::move(points)), epsilon_(epsilon), rho_(std::move(rho)) {
  if (points_.empty()) throw EmptyInput("EpsNet: no points");
  if (!(epsilon_ > 0.0)) throw EmptyInput("EpsNet: epsilon must be positive");
}

double EpsNet::diameter() const {
  double d = 0.0;
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = i + 1; j < points_.size(); ++j)
      d = std::max(d, (points_[i] - points_[j]).norm());
  return d;
}

double EpsNet::distance_to(const Vector& x) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : points_) best = std::min(best, rho_(x - p));
  return best;
}

void EpsNet::write_csv(std::ostream& os) const {
  os << "# epsilon = " << format17(epsilon_) << "\n";
  for (const auto& p : points_) {
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      if (i) os << ",";
      os << format17(p[i]);
    }
    os << "\n";
  }
}

EpsNet build_eps_net(const ConvexBody& body, const AdmissibleSeminorm& rho,
                     double epsilon, const std::vector<Vector>& grid,
                     const NetOptions& options) {
  if (grid.empty()) throw EmptyInput("build_eps_net: empty grid");
  if (!(epsilon > 0.0)) throw EmptyInput("build_eps_net: epsilon must be positive");
  const double radius = epsilon * (1.0 - options.margin);

  // min rho-distance of each grid point to the net chosen so far
  std::vector<double> dist(grid.size(), std::numeric_limits<double>::infinity());
  std::vector<std::size_t> chosen;
  chosen.push_back(0);

  while (true) {
    const Vector& latest = grid[chosen.back()];
    std::size_t farthest = 0;
    double far_dist = -1.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      dist[i] = std::min(dist[i], rho(grid[i] - latest));
      if (dist[i] > far_dist) {  // strict: ties stay at the lowest index
        far_dist = dist[i];
        farthest = i;
      }
    }
    if (far_dist < radius) break;
    if (chosen.size() >= options.max_points)
      throw NetOverflow("build_eps_net: cap of " + std::to_string(options.max_points) +
                            " points exceeded; epsilon too small for the grid",
                        options.max_points);
    chosen.push_back(farthest);
  }

  std::vector<Vector> points;
  points.reserve(chosen.size());
  for (std::size_t idx : chosen) {
    const auto fit = body.barycentric_fit(grid[idx]);
    if (fit.residual > options.membership_tol)
      throw EmptyInput("build_eps_net: grid point " + std::to_string(idx) +
                       " is not a member of the body");
    points.push_back(grid[idx]);
  }
  return EpsNet(std::move(points), epsilon, rho);
}

CoverageReport check_coverage(const EpsNet& net, const std::vector<Vector>& points,
                              double radius) {
  CoverageReport report;
  report.checked = points.size();
  std::size_t uncovered = 0;
  for (const auto& x : points) {
    const double d = net.distance_to(x);
    report.max_min_distance = std::max(report.max_min_distance, d);
    if (d >= radius) ++uncovered;
  }
  report.uncovered_fraction =
      points.empty() ? 0.0 : static_cast<double>(uncovered) / static_cast<double>(points.size());
  return report;
}

std::vector<Vector> make_net_grid(const ConvexBody& body, const AdmissibleSeminorm& rho,
                                  double epsilon, double margin,
                                  const GridOptions& options) {
  std::vector<Vector> grid;
  if (options.jitter_count > 0) {
    auto jitter = body.sample(options.jitter_count, options.seed);
    grid.insert(grid.end(), jitter.begin(), jitter.end());
  }

  // rho(v) <= L1 * ||v||_inf, so a box lattice of pitch p has rho-dispersion
  // at most L1 * p / 2 in the interior
  double l1 = 0.0;
  for (std::size_t n = 0; n < rho.size(); ++n)
    l1 += rho.weights()[n] * rho.functionals()[n].coefficients.cwiseAbs().sum();

  const double target_dispersion = 0.5 * margin * epsilon;
  const double pitch = (l1 > 0.0) ? 2.0 * target_dispersion / l1
                                  : std::numeric_limits<double>::infinity();

  const Vector lo = body.box_min(), hi = body.box_max();
  const int d = body.dimension();
  double lattice_size = 1.0;
  std::vector<int> counts(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    const double width = hi[i] - lo[i];
    counts[static_cast<std::size_t>(i)] =
        (width <= 0.0 || !std::isfinite(pitch))
            ? 1
            : static_cast<int>(std::ceil(width / pitch)) + 1;
    lattice_size *= counts[static_cast<std::size_t>(i)];
    if (lattice_size > 1e12) break;
  }

  if (lattice_size <= static_cast<double>(options.max_lattice_points)) {
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    Vector p(d);
    while (true) {
      for (int i = 0; i < d; ++i) {
        const int c = counts[static_cast<std::size_t>(i)];
        p[i] = (c == 1) ? lo[i]
                        : lo[i] + (hi[i] - lo[i]) * idx[static_cast<std::size_t>(i)] /
                                      static_cast<double>(c - 1);
      }
      if (body.contains(p, options.membership_tol)) grid.push_back(p);
      int axis = 0;
      while (axis < d) {
        if (++idx[static_cast<std::size_t>(axis)] < counts[static_cast<std::size_t>(axis)]) break;
        idx[static_cast<std::size_t>(axis)] = 0;
        ++axis;
      }
      if (axis == d) break;
    }
  } else {
    auto extra = body.sample(options.fallback_samples, options.seed ^ 0xd1b54a32d192ed03ull);
    grid.insert(grid.end(), extra.begin(), extra.end());
  }

  for (const auto& g : body.generators()) grid.push_back(g);
  return grid;
}

}  // namespace afpkit
