#include "afpkit/afp.hpp"

#include <cmath>

#include "afpkit/errors.hpp"
#include "afpkit/schauder.hpp"

namespace afpkit {

const AfpLevelRecord& AfpTrace::last_ok() const {
  for (auto it = levels.rbegin(); it != levels.rend(); ++it)
    if (it->ok) return *it;
  throw EmptyInput("AfpTrace: no successful level");
}

std::vector<double> weak_residuals(const AdmissibleSeminorm& rho, const Vector& u,
                                   const Vector& fu) {
  if (u.size() != fu.size() || u.size() != rho.dimension())
    throw DimensionMismatch("weak_residuals: dimension mismatch");
  const Vector defect = u - fu;
  std::vector<double> out(rho.size());
  for (std::size_t k = 0; k < rho.size(); ++k)
    out[k] = std::abs(rho.functionals()[k].coefficients.dot(defect));
  return out;
}

namespace {

void audit_self_map(const ConvexBody& body, const SelfMap& f, int samples,
                    std::uint64_t seed, double refit_tol) {
  const auto pts = body.sample(std::max(samples, 1), seed);
  for (const auto& x : pts) {
    const Vector y = f.evaluator(x);
    const auto fit = body.barycentric_fit(y);
    if (fit.residual > refit_tol)
      throw MapLeavesHull("self-map audit: '" + f.label + "' left the body (residual " +
                              std::to_string(fit.residual) + ")",
                          fit.residual);
  }
}

}  // namespace

AfpTrace run_afp(const ConvexBody& body, const AdmissibleSeminorm& rho, const SelfMap& f,
                 const std::vector<int>& levels, const AfpConfig& config) {
  if (levels.empty()) throw EmptyInput("run_afp: no levels");
  for (std::size_t i = 1; i < levels.size(); ++i)
    if (levels[i] <= levels[i - 1])
      throw EmptyInput("run_afp: levels must be strictly increasing");

  const auto rho_audit = audit_admissible(rho, body, 256, config.seed ^ 0xa5a5a5a5ull, 1e-10);
  if (!rho_audit.pass)
    throw AdmissibilityFailure("run_afp: seminorm failed the admissibility audit");
  audit_self_map(body, f, config.audit_samples, config.seed ^ 0x5bd1e995ull,
                 config.audit_refit_tol);

  AfpTrace trace;
  for (const int n : levels) {
    AfpLevelRecord rec;
    rec.n = n;
    rec.epsilon = 1.0 / static_cast<double>(n);
    try {
      GridOptions grid_opts = config.grid;
      grid_opts.seed = config.seed + static_cast<std::uint64_t>(n);
      const auto grid = make_net_grid(body, rho, rec.epsilon, config.net.margin, grid_opts);
      EpsNet net = build_eps_net(body, rho, rec.epsilon, grid, config.net);
      rec.net_size = net.size();

      SchauderProjection project(net);
      const PointMap composite = [&](const Vector& z) { return project(f.evaluator(z)); };

      SolveOptions solver_opts = config.solver;
      solver_opts.seed = config.seed ^ (0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(n));
      rec.solver_tol = default_brouwer_tol(rec.epsilon);
      rec.solver = solve_fixed_point(composite, net, rec.solver_tol, solver_opts);

      rec.u = rec.solver.point;
      const Vector fu = f.evaluator(rec.u);
      rec.rho_residual = rho(rec.u - fu);
      rec.weak_residuals = weak_residuals(rho, rec.u, fu);
      rec.ok = rec.solver.converged;
      if (!rec.ok) rec.error = "NotConverged(best_residual=" +
                               std::to_string(rec.solver.residual_norm) + ")";
    } catch (const Error& e) {
      rec.ok = false;
      rec.error = e.what();
    }
    trace.levels.push_back(std::move(rec));
    if (!trace.levels.back().ok && config.stop_on_level_failure) break;
  }
  return trace;
}

std::vector<ConvexBody> orbit_hull_chain(const SelfMap& f, const Vector& a, int depth,
                                         int samples, std::uint64_t seed) {
  if (depth < 1) throw EmptyInput("orbit_hull_chain: depth must be >= 1");
  if (samples < 1) throw EmptyInput("orbit_hull_chain: samples must be >= 1");

  // A_0: hull of the truncated orbit {a, f(a), ..., f^N(a)}
  std::vector<Vector> orbit;
  orbit.push_back(a);
  Vector x = a;
  for (int k = 0; k < samples; ++k) {
    x = f.evaluator(x);
    orbit.push_back(x);
  }

  std::vector<ConvexBody> chain;
  chain.emplace_back(std::move(orbit));
  for (int k = 0; k < depth; ++k) {
    const auto sample = chain.back().sample(samples, seed + static_cast<std::uint64_t>(k));
    std::vector<Vector> images;
    images.reserve(sample.size());
    for (const auto& s : sample) images.push_back(f.evaluator(s));
    chain.emplace_back(std::move(images));
  }
  return chain;
}

Vector extract_fixed_point(const AfpTrace& trace, const SelfMap& f, double tol) {
  if (trace.levels.empty()) throw EmptyInput("extract_fixed_point: empty trace");
  Vector p = trace.last_ok().u;
  if (f.iterate_power) {
    for (int k = 0; k < *f.iterate_power; ++k) p = f.evaluator(p);
  }
  const double residual = (f.evaluator(p) - p).norm();
  if (residual <= tol) return p;
  throw NotFound("extract_fixed_point: residual " + std::to_string(residual) +
                     " above tolerance",
                 residual);
}

bool check_decay(const std::vector<std::vector<double>>& rows, const DecayPolicy& policy,
                 std::string* detail) {
  if (rows.size() < 2) return true;
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw DimensionMismatch("check_decay: ragged rows");

  for (std::size_t k = 0; k < cols; ++k) {
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (rows[i][k] > policy.slack * rows[i - 1][k] + policy.floor) {
        if (detail)
          *detail = "column " + std::to_string(k) + " grew at step " + std::to_string(i);
        return false;
      }
    }
    if (rows.back()[k] > rows.front()[k] + policy.floor) {
      if (detail) *detail = "column " + std::to_string(k) + " ended above its first value";
      return false;
    }
  }
  return true;
}

TraceAudit audit_trace(const AfpTrace& trace, const ConvexBody& body,
                       const DecayPolicy& decay, double membership_tol) {
  TraceAudit audit;
  std::vector<std::vector<double>> weak_rows;
  for (const auto& level : trace.levels) {
    if (!level.ok) {
      audit.all_levels_ok = false;
      audit.detail += "level " + std::to_string(level.n) + ": " + level.error + "; ";
      continue;
    }
    if (!(level.rho_residual < 1.0 / level.n + level.solver_tol)) {
      audit.residual_contract = false;
      audit.detail += "residual contract broken at level " + std::to_string(level.n) + "; ";
    }
    if (body.barycentric_fit(level.u).residual > membership_tol) {
      audit.membership = false;
      audit.detail += "u_" + std::to_string(level.n) + " left the body; ";
    }
    weak_rows.push_back(level.weak_residuals);
  }
  std::string decay_detail;
  if (!check_decay(weak_rows, decay, &decay_detail)) {
    audit.weak_decay = false;
    audit.detail += "weak decay: " + decay_detail + "; ";
  }
  return audit;
}

}  // namespace afpkit
