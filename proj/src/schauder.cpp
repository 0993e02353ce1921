#include "afpkit/schauder.hpp"

#include <algorithm>

#include "afpkit/errors.hpp"

namespace afpkit {

double partition_value(const AdmissibleSeminorm& rho, double epsilon, const Vector& p,
                       const Vector& x) {
  if (p.size() != x.size())
    throw DimensionMismatch("partition_value: point dimension mismatch");
  return std::max(epsilon - rho(x - p), 0.0);
}

std::vector<double> SchauderProjection::weights(const Vector& x) const {
  const auto& pts = net_.points();
  const auto& rho = net_.rho();
  const double eps = net_.epsilon();

  std::vector<double> g(pts.size());
  double total = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    g[i] = partition_value(rho, eps, pts[i], x);
    total += g[i];
  }
  // underflow guard: a vanishing total flags a coverage gap, never divide
  if (total < 1e-14)
    throw UncoveredPoint("SchauderProjection: all partition values vanish at query point");
  for (auto& gi : g) gi /= total;
  return g;
}

Vector SchauderProjection::operator()(const Vector& x) const {
  const auto w = weights(x);
  const auto& pts = net_.points();
  Vector out = Vector::Zero(x.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (w[i] != 0.0) out += w[i] * pts[i];
  return out;
}

}  // namespace afpkit
