#pragma once

#include "afpkit/types.hpp"

namespace afpkit {

struct NnlsResult {
  Vector x;        // x >= 0 componentwise
  double residual; // ||A x - b||_2
  int iterations;
};

/// Lawson-Hanson active-set solver for min ||A x - b|| subject to x >= 0.
/// Terminates finitely; ties in the entering variable go to the lowest
/// column index so the result is deterministic.
NnlsResult nnls(const Matrix& A, const Vector& b, int max_iterations = 0);

}  // namespace afpkit
