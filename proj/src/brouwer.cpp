#include "afpkit/brouwer.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "afpkit/errors.hpp"

namespace afpkit {

const char* to_string(FixedPointMethod m) {
  switch (m) {
    case FixedPointMethod::damped_iteration: return "damped_iteration";
    case FixedPointMethod::multistart_minimization: return "multistart_minimization";
    case FixedPointMethod::grid_oracle: return "grid_oracle";
  }
  return "unknown";
}

Vector simplex_project(const Vector& v) {
  // sort-based projection: w = max(v - theta, 0) with theta from the
  // largest prefix keeping the weights positive
  const Eigen::Index m = v.size();
  std::vector<double> u(v.data(), v.data() + m);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cumsum = 0.0, theta = 0.0;
  int support = 0;
  for (Eigen::Index k = 0; k < m; ++k) {
    cumsum += u[static_cast<std::size_t>(k)];
    const double t = (cumsum - 1.0) / static_cast<double>(k + 1);
    if (u[static_cast<std::size_t>(k)] - t > 0.0) {
      theta = t;
      support = static_cast<int>(k) + 1;
    }
  }
  (void)support;
  Vector w = (v.array() - theta).cwiseMax(0.0);
  const double s = w.sum();
  if (s > 0.0) w /= s;  // exact renormalization against rounding drift
  return w;
}

int affine_dimension(const std::vector<Vector>& points, double tol) {
  if (points.size() <= 1) return 0;
  const Eigen::Index d = points.front().size();
  Matrix D(d, static_cast<Eigen::Index>(points.size() - 1));
  for (std::size_t i = 1; i < points.size(); ++i)
    D.col(static_cast<Eigen::Index>(i - 1)) = points[i] - points.front();
  Eigen::JacobiSVD<Matrix> svd(D);
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 0;
  const double cut = tol * std::max(1.0, s[0]);
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > cut) ++rank;
  return rank;
}

namespace {

struct HullFrame {
  Matrix P;  // d x m, columns are net points

  explicit HullFrame(const EpsNet& net) {
    const auto& pts = net.points();
    P.resize(pts.front().size(), static_cast<Eigen::Index>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i)
      P.col(static_cast<Eigen::Index>(i)) = pts[i];
  }

  Vector embed(const Vector& w) const { return P * w; }

  /// Barycentric coordinates of the hull point nearest to y.
  Vector hull_weights(const Vector& y) const {
    return barycentric_fit_points(P, y).weights;
  }
};

struct Evaluation {
  Vector image;       // map(z)
  Vector image_bary;  // barycentric weights of map(z) over the net
  double residual;    // ||map(z) - z||_2
};

class Evaluator {
 public:
  Evaluator(const PointMap& map, const HullFrame& frame, double refit_tol, int budget)
      : map_(map), frame_(frame), refit_tol_(refit_tol), budget_(budget) {}

  bool exhausted() const { return evals_ >= budget_; }
  int evals() const { return evals_; }

  Evaluation operator()(const Vector& z) {
    ++evals_;
    Vector y = map_(z);
    if (y.size() != z.size())
      throw DimensionMismatch("solve_fixed_point: map changed the dimension");
    auto fit = barycentric_fit_points(frame_.P, y);
    if (fit.residual > refit_tol_)
      throw MapLeavesHull("solve_fixed_point: map output failed the barycentric re-fit",
                          fit.residual);
    const double residual = (y - z).norm();
    return Evaluation{std::move(y), std::move(fit.weights), residual};
  }

 private:
  const PointMap& map_;
  const HullFrame& frame_;
  double refit_tol_;
  int budget_;
  int evals_ = 0;
};

// Nelder-Mead on unconstrained coordinates; the objective projects onto the
// simplex internally, so far-out probes collapse to boundary points.
struct NmOutcome {
  Vector w;
  double value;
};

NmOutcome nelder_mead(const std::function<double(const Vector&)>& objective,
                      const Vector& w0, double step, int max_evals, double target) {
  const Eigen::Index m = w0.size();
  const Eigen::Index nv = m + 1;
  std::vector<Vector> simplex(static_cast<std::size_t>(nv), w0);
  std::vector<double> value(static_cast<std::size_t>(nv),
                            std::numeric_limits<double>::infinity());
  int evals = 0;

  value[0] = objective(w0);
  ++evals;
  bool init_done = true;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (evals >= max_evals) {
      init_done = false;
      break;
    }
    Vector v = w0;
    v[i] += step;
    simplex[static_cast<std::size_t>(i + 1)] = v;
    value[static_cast<std::size_t>(i + 1)] = objective(v);
    ++evals;
  }

  std::vector<std::size_t> order(static_cast<std::size_t>(nv));
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto sort_order = [&] {
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return value[a] < value[b]; });
  };
  sort_order();

  while (init_done && evals < max_evals && value[order[0]] > target) {
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[order.size() - 2];
    Vector centroid = Vector::Zero(m);
    for (std::size_t k = 0; k + 1 < order.size(); ++k) centroid += simplex[order[k]];
    centroid /= static_cast<double>(nv - 1);

    Vector reflected = centroid + (centroid - simplex[worst]);
    const double fr = objective(reflected);
    ++evals;

    if (fr < value[order[0]]) {
      Vector expanded = centroid + 2.0 * (centroid - simplex[worst]);
      const double fe = objective(expanded);
      ++evals;
      if (fe < fr) {
        simplex[worst] = expanded;
        value[worst] = fe;
      } else {
        simplex[worst] = reflected;
        value[worst] = fr;
      }
    } else if (fr < value[second_worst]) {
      simplex[worst] = reflected;
      value[worst] = fr;
    } else {
      Vector contracted = centroid + 0.5 * (simplex[worst] - centroid);
      const double fc = objective(contracted);
      ++evals;
      if (fc < value[worst]) {
        simplex[worst] = contracted;
        value[worst] = fc;
      } else {
        for (std::size_t k = 1; k < order.size(); ++k) {
          simplex[order[k]] = simplex[order[0]] + 0.5 * (simplex[order[k]] - simplex[order[0]]);
          value[order[k]] = objective(simplex[order[k]]);
          ++evals;
          if (evals >= max_evals) break;
        }
      }
    }
    sort_order();
  }

  return NmOutcome{simplex[order[0]], value[order[0]]};
}

}  // namespace

FixedPointResult solve_fixed_point(const PointMap& map, const EpsNet& net, double tol,
                                   const SolveOptions& options) {
  if (!(tol > 0.0)) throw EmptyInput("solve_fixed_point: tol must be positive");
  const HullFrame frame(net);
  const Eigen::Index m = frame.P.cols();
  Evaluator evaluate(map, frame, options.refit_tol, options.budget);

  auto make_result = [&](const Vector& w, double residual, FixedPointMethod method,
                         bool converged) {
    FixedPointResult r;
    r.point = frame.embed(w);
    r.barycentric.assign(w.data(), w.data() + w.size());
    r.residual_norm = residual;
    r.iterations = evaluate.evals();
    r.method = method;
    r.converged = converged;
    return r;
  };

  // damped phase from the barycenter
  Vector w = Vector::Constant(m, 1.0 / static_cast<double>(m));
  Evaluation cur = evaluate(frame.embed(w));
  Vector best_w = w;
  double best_r = cur.residual;
  if (cur.residual <= tol) {
    auto r = make_result(w, cur.residual, FixedPointMethod::damped_iteration, true);
    r.iterations = 0;  // converged at the start point
    return r;
  }

  double lambda = 1.0;
  int accepted = 0;
  while (!evaluate.exhausted()) {
    const Vector trial = (1.0 - lambda) * w + lambda * cur.image_bary;
    Evaluation next = evaluate(frame.embed(trial));
    if (next.residual < cur.residual) {
      w = trial;
      cur = std::move(next);
      ++accepted;
      lambda = std::min(1.0, 1.5 * lambda);
      if (cur.residual < best_r) {
        best_r = cur.residual;
        best_w = w;
      }
      if (cur.residual <= tol) {
        auto r = make_result(w, cur.residual, FixedPointMethod::damped_iteration, true);
        r.iterations = accepted;
        return r;
      }
    } else {
      lambda *= 0.5;
      if (lambda < options.min_damping) break;  // stalled, escalate
    }
  }

  // multistart Nelder-Mead over barycentric coordinates; starts are the
  // damped-phase best, the first net vertices, and seeded Dirichlet draws
  std::vector<Vector> starts;
  starts.push_back(best_w);
  for (Eigen::Index i = 0; i < m && static_cast<int>(i) < options.net_vertex_starts; ++i) {
    Vector e = Vector::Zero(m);
    e[i] = 1.0;
    starts.push_back(e);
  }
  Rng rng(options.seed);
  for (int k = 0; k < options.dirichlet_starts; ++k) {
    const auto d = rng.dirichlet_uniform(static_cast<std::size_t>(m));
    Vector v(m);
    for (Eigen::Index i = 0; i < m; ++i) v[i] = d[static_cast<std::size_t>(i)];
    starts.push_back(v);
  }

  auto objective = [&](const Vector& v) -> double {
    if (evaluate.exhausted()) return std::numeric_limits<double>::infinity();
    return evaluate(frame.embed(simplex_project(v))).residual;
  };

  Vector best_nm_w = best_w;
  double best_nm_r = best_r;
  for (const auto& s : starts) {
    if (evaluate.exhausted()) break;
    const int remaining = options.budget - evaluate.evals();
    const int share = std::max(remaining / static_cast<int>(starts.size()), 2 * static_cast<int>(m) + 8);
    NmOutcome out = nelder_mead(objective, s, 0.25, std::min(remaining, share), tol);
    if (out.value < best_nm_r) {  // strict: earlier starts win ties
      best_nm_r = out.value;
      best_nm_w = simplex_project(out.w);
    }
    if (best_nm_r <= tol) break;
  }

  // re-verify the certificate with a fresh evaluation of the map
  const Vector z = frame.embed(best_nm_w);
  const double certified = (map(z) - z).norm();
  auto r = make_result(best_nm_w, certified, FixedPointMethod::multistart_minimization,
                       certified <= tol);
  return r;
}

double grid_oracle_spacing(const EpsNet& net, int resolution) {
  return net.diameter() / static_cast<double>(resolution);
}

Vector grid_oracle(const PointMap& map, const EpsNet& net, int resolution) {
  if (resolution < 1) throw EmptyInput("grid_oracle: resolution must be >= 1");
  if (affine_dimension(net.points()) > 3)
    throw DimensionTooHigh("grid_oracle: affine dimension of the net exceeds 3");

  const HullFrame frame(net);
  const Eigen::Index m = frame.P.cols();

  Vector best_z;
  double best_r = std::numeric_limits<double>::infinity();
  Vector w = Vector::Zero(m);

  // enumerate compositions of `resolution` into m slots, first slot largest
  // first, so the identity map resolves to the first net point
  std::function<void(Eigen::Index, int)> recurse = [&](Eigen::Index slot, int remaining) {
    if (slot == m - 1) {
      w[slot] = remaining;
      const Vector z = frame.P * (w / static_cast<double>(resolution));
      const double r = (map(z) - z).norm();
      if (r < best_r) {
        best_r = r;
        best_z = z;
      }
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      w[slot] = k;
      recurse(slot + 1, remaining - k);
    }
  };
  recurse(0, resolution);
  return best_z;
}

}  // namespace afpkit
