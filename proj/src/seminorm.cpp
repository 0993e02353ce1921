#include "afpkit/seminorm.hpp"

#include <cmath>
#include <limits>

#include "afpkit/errors.hpp"

namespace afpkit {

AdmissibleSeminorm::AdmissibleSeminorm(std::vector<LinearFunctional> functionals,
                                       std::vector<double> weights,
                                       double body_diameter_bound)
    : functionals_(std::move(functionals)),
      weights_(std::move(weights)),
      body_diameter_bound_(body_diameter_bound) {
  if (functionals_.empty()) throw EmptyInput("AdmissibleSeminorm: no functionals");
  if (weights_.size() != functionals_.size())
    throw DimensionMismatch("AdmissibleSeminorm: one weight per functional required");
  dimension_ = static_cast<int>(functionals_.front().coefficients.size());
  euclidean_lipschitz_ = 0.0;
  for (std::size_t n = 0; n < functionals_.size(); ++n) {
    const auto& f = functionals_[n];
    if (f.coefficients.size() != dimension_)
      throw DimensionMismatch("AdmissibleSeminorm: functionals of mixed dimension");
    if (f.coefficients.cwiseAbs().maxCoeff() == 0.0)
      throw EmptyInput("AdmissibleSeminorm: trivial functional '" + f.label + "'");
    if (!(weights_[n] > 0.0) || !std::isfinite(weights_[n]))
      throw EmptyInput("AdmissibleSeminorm: weights must be strictly positive and finite");
    euclidean_lipschitz_ += weights_[n] * f.coefficients.norm();
  }
}

double AdmissibleSeminorm::operator()(const Vector& x) const {
  if (x.size() != dimension_)
    throw DimensionMismatch("AdmissibleSeminorm: eval dimension mismatch");
  double v = 0.0;
  for (std::size_t n = 0; n < functionals_.size(); ++n)
    v += weights_[n] * std::abs(functionals_[n].coefficients.dot(x));
  return v;
}

AdmissibleSeminorm build_admissible(const std::vector<LinearFunctional>& functionals,
                                    const ConvexBody& body,
                                    const SeminormOptions& options) {
  if (functionals.empty()) throw EmptyInput("build_admissible: no functionals");
  if (body.generator_count() == 0) throw EmptyInput("build_admissible: empty body");
  for (const auto& f : functionals)
    if (f.coefficients.size() != body.dimension())
      throw DimensionMismatch("build_admissible: functional/body dimension mismatch");

  const auto& gens = body.generators();

  // pairwise separation of the generators by the raw family
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if ((gens[i] - gens[j]).cwiseAbs().maxCoeff() <= options.separation_tol)
        continue;  // same point up to tolerance, nothing to separate
      bool separated = false;
      for (const auto& f : functionals) {
        if (std::abs(f.coefficients.dot(gens[i] - gens[j])) > options.separation_tol) {
          separated = true;
          break;
        }
      }
      if (!separated)
        throw SeparationFailure("build_admissible: generators " + std::to_string(i) +
                                " and " + std::to_string(j) +
                                " are indistinguishable by all functionals");
    }
  }

  std::vector<double> weights(functionals.size());
  std::vector<std::size_t> degenerate;
  std::vector<std::string> warnings;
  double diam_bound = 0.0;
  for (std::size_t n = 0; n < functionals.size(); ++n) {
    const double cap = std::ldexp(1.0, -static_cast<int>(n) - 2);  // 2^{-(n+1)}, n from 1
    double max_val = 0.0, min_val = 0.0, max_abs = 0.0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const double v = functionals[n].coefficients.dot(gens[i]);
      max_abs = std::max(max_abs, std::abs(v));
      max_val = (i == 0) ? v : std::max(max_val, v);
      min_val = (i == 0) ? v : std::min(min_val, v);
    }
    if (max_abs > 0.0) {
      weights[n] = cap / max_abs;
    } else {
      // functional vanishes on every generator; its weight is unconstrained,
      // so keep the series bound valid and flag it
      weights[n] = cap;
      degenerate.push_back(n);
      warnings.push_back("functional '" + functionals[n].label +
                         "' vanishes on all generators; weight defaulted to 2^-(n+1)");
    }
    diam_bound += weights[n] * (max_val - min_val);
  }

  AdmissibleSeminorm rho(functionals, std::move(weights), diam_bound);
  rho.degenerate_ = std::move(degenerate);
  rho.warnings_ = std::move(warnings);
  return rho;
}

SeminormAudit audit_admissible(const AdmissibleSeminorm& rho, const ConvexBody& body,
                               int samples, std::uint64_t seed, double tol) {
  SeminormAudit report;
  Rng rng(seed);
  const auto pts = body.sample(2 * std::max(samples, 1), seed ^ 0x9e3779b97f4a7c15ull);

  for (int k = 0; k < samples; ++k) {
    const Vector& x = pts[static_cast<std::size_t>(2 * k)];
    const Vector& y = pts[static_cast<std::size_t>(2 * k + 1)];
    const double lambda = rng.uniform(-10.0, 10.0);

    const double rx = rho(x), ry = rho(y);
    report.max_subadditivity_violation =
        std::max(report.max_subadditivity_violation, rho(x + y) - rx - ry);
    const double scale = std::max(1.0, std::abs(lambda) * rx);
    report.max_homogeneity_violation =
        std::max(report.max_homogeneity_violation,
                 std::abs(rho(lambda * x) - std::abs(lambda) * rx) / scale);
  }

  const auto& gens = body.generators();
  for (std::size_t n = 0; n < rho.size(); ++n) {
    const double cap = std::ldexp(1.0, -static_cast<int>(n) - 2);
    for (const auto& g : gens) {
      const double term =
          rho.weights()[n] * std::abs(rho.functionals()[n].coefficients.dot(g));
      report.max_rescale_excess = std::max(report.max_rescale_excess, term - cap);
    }
  }

  report.min_generator_separation = std::numeric_limits<double>::infinity();
  bool has_distinct_pair = false;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if ((gens[i] - gens[j]).cwiseAbs().maxCoeff() <= 1e-14) continue;
      has_distinct_pair = true;
      report.min_generator_separation =
          std::min(report.min_generator_separation, rho(gens[i] - gens[j]));
    }
  }
  if (!has_distinct_pair) report.min_generator_separation = 0.0;

  report.pass = report.max_subadditivity_violation <= tol &&
                report.max_homogeneity_violation <= tol &&
                report.max_rescale_excess <= tol &&
                (!has_distinct_pair || report.min_generator_separation > 0.0);
  if (!report.pass) report.detail = "seminorm axiom audit failed";
  return report;
}

}  // namespace afpkit
