#include "afpkit/nnls.hpp"

#include <Eigen/QR>
#include <limits>

namespace afpkit {

NnlsResult nnls(const Matrix& A, const Vector& b, int max_iterations) {
  const Eigen::Index n = A.cols();
  if (max_iterations <= 0) max_iterations = static_cast<int>(3 * n + 30);

  Vector x = Vector::Zero(n);
  std::vector<bool> passive(static_cast<std::size_t>(n), false);
  Eigen::Index n_passive = 0;

  Vector residual_vec = b;
  const double grad_tol = 1e-12 * (1.0 + b.norm()) * (1.0 + A.norm());

  auto solve_passive = [&](const Vector& rhs) -> Vector {
    // least squares restricted to the passive columns
    Matrix Ap(A.rows(), n_passive);
    Eigen::Index c = 0;
    for (Eigen::Index j = 0; j < n; ++j)
      if (passive[static_cast<std::size_t>(j)]) Ap.col(c++) = A.col(j);
    Vector zp = Ap.colPivHouseholderQr().solve(rhs);
    Vector z = Vector::Zero(n);
    c = 0;
    for (Eigen::Index j = 0; j < n; ++j)
      if (passive[static_cast<std::size_t>(j)]) z[j] = zp[c++];
    return z;
  };

  int iter = 0;
  while (iter < max_iterations) {
    Vector w = A.transpose() * residual_vec;

    // entering variable: most positive gradient among active columns
    Eigen::Index enter = -1;
    double best = grad_tol;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!passive[static_cast<std::size_t>(j)] && w[j] > best) {
        best = w[j];
        enter = j;
      }
    }
    if (enter < 0) break;  // KKT satisfied

    passive[static_cast<std::size_t>(enter)] = true;
    ++n_passive;

    while (true) {
      ++iter;
      Vector z = solve_passive(b);

      bool feasible = true;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (passive[static_cast<std::size_t>(j)] && z[j] <= 0.0) {
          feasible = false;
          break;
        }
      }
      if (feasible) {
        x = z;
        break;
      }

      // step toward z until the first passive coordinate hits zero
      double alpha = std::numeric_limits<double>::infinity();
      for (Eigen::Index j = 0; j < n; ++j) {
        if (passive[static_cast<std::size_t>(j)] && z[j] <= 0.0) {
          const double denom = x[j] - z[j];
          if (denom > 0.0) alpha = std::min(alpha, x[j] / denom);
        }
      }
      if (!std::isfinite(alpha)) alpha = 0.0;
      x += alpha * (z - x);

      for (Eigen::Index j = 0; j < n; ++j) {
        if (passive[static_cast<std::size_t>(j)] && x[j] <= 1e-14) {
          x[j] = 0.0;
          passive[static_cast<std::size_t>(j)] = false;
          --n_passive;
        }
      }
      if (n_passive == 0) break;
      if (iter >= max_iterations) break;
    }

    residual_vec = b - A * x;
  }

  return NnlsResult{x, (b - A * x).norm(), iter};
}

}  // namespace afpkit
