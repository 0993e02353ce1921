#include "afpkit/convex_body.hpp"

#include <limits>

#include "afpkit/errors.hpp"
#include "afpkit/nnls.hpp"

namespace afpkit {

namespace {

Matrix make_fit_matrix(const Matrix& points, double row_scale) {
  Matrix A(points.rows() + 1, points.cols());
  A.topRows(points.rows()) = points;
  A.row(points.rows()).setConstant(row_scale);
  return A;
}

BarycentricFit fit_against(const Matrix& points, const Matrix& fit_matrix,
                           double row_scale, const Vector& x) {
  if (x.size() != points.rows())
    throw DimensionMismatch("barycentric_fit: point dimension mismatch");
  Vector b(x.size() + 1);
  b.head(x.size()) = x;
  b[x.size()] = row_scale;

  NnlsResult r = nnls(fit_matrix, b);
  const double sum = r.x.sum();
  if (!(sum > 1e-300)) {
    return BarycentricFit{Vector::Zero(points.cols()),
                          std::numeric_limits<double>::infinity(), sum};
  }
  Vector w = r.x / sum;
  const double residual = (points * w - x).norm();
  return BarycentricFit{std::move(w), residual, sum};
}

}  // namespace

ConvexBody::ConvexBody(std::vector<Vector> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty()) throw EmptyInput("ConvexBody: no generators");
  dimension_ = static_cast<int>(generators_.front().size());
  if (dimension_ == 0) throw EmptyInput("ConvexBody: zero-dimensional generator");
  for (const auto& g : generators_)
    if (g.size() != dimension_)
      throw DimensionMismatch("ConvexBody: generators of mixed dimension");

  gen_matrix_.resize(dimension_, static_cast<Eigen::Index>(generators_.size()));
  for (std::size_t i = 0; i < generators_.size(); ++i)
    gen_matrix_.col(static_cast<Eigen::Index>(i)) = generators_[i];

  box_min_ = gen_matrix_.rowwise().minCoeff();
  box_max_ = gen_matrix_.rowwise().maxCoeff();

  // the sum-to-one row is weighted against the coordinate scale so the
  // augmented least-squares system stays well conditioned
  fit_row_scale_ = 8.0 * (1.0 + gen_matrix_.cwiseAbs().maxCoeff());
  fit_matrix_ = make_fit_matrix(gen_matrix_, fit_row_scale_);
}

std::vector<Vector> ConvexBody::sample(int count, std::uint64_t seed) const {
  if (count < 1) throw EmptyInput("ConvexBody::sample: count must be >= 1");
  Rng rng(seed);
  std::vector<Vector> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const auto w = rng.dirichlet_uniform(generators_.size());
    Vector p = Vector::Zero(dimension_);
    for (std::size_t i = 0; i < generators_.size(); ++i) p += w[i] * generators_[i];
    out.push_back(std::move(p));
  }
  return out;
}

BarycentricFit ConvexBody::barycentric_fit(const Vector& x) const {
  return fit_against(gen_matrix_, fit_matrix_, fit_row_scale_, x);
}

bool ConvexBody::contains(const Vector& x, double tol) const {
  return barycentric_fit(x).residual <= tol;
}

Vector ConvexBody::centroid() const {
  Vector c = Vector::Zero(dimension_);
  for (const auto& g : generators_) c += g;
  return c / static_cast<double>(generators_.size());
}

double ConvexBody::diameter() const {
  double d = 0.0;
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      d = std::max(d, (generators_[i] - generators_[j]).norm());
  return d;
}

BarycentricFit barycentric_fit_points(const Matrix& points, const Vector& x) {
  const double row_scale = 8.0 * (1.0 + points.cwiseAbs().maxCoeff());
  return fit_against(points, make_fit_matrix(points, row_scale), row_scale, x);
}

}  // namespace afpkit
