#include <doctest.h>

#include <cmath>

#include "afpkit/brouwer.hpp"
#include "afpkit/errors.hpp"
#include "test_helpers.hpp"

using namespace afpkit;
using testing::vec;

namespace {

AdmissibleSeminorm square_rho() {
  return build_admissible(testing::coordinate_functionals(2), testing::unit_square());
}

EpsNet square_corner_net(double eps = 0.5) {
  return EpsNet(testing::unit_square().generators(), eps, square_rho());
}

EpsNet segment_net() {
  return EpsNet({vec({-1.0}), vec({1.0})}, 0.5,
                AdmissibleSeminorm({{vec({1.0}), "e1"}}, {0.25}, 0.5));
}

Vector rotate90(const Vector& z) { return vec({-z[1], z[0]}); }

}  // namespace

TEST_CASE("identity map converges at the start point with zero residual") {
  const auto net = square_corner_net();
  const auto r = solve_fixed_point([](const Vector& z) { return z; }, net, 1e-10, 100, 1);
  CHECK(r.converged);
  CHECK(r.residual_norm == 0.0);
  CHECK(r.iterations == 0);
  CHECK(r.method == FixedPointMethod::damped_iteration);
}

TEST_CASE("constant map lands on its value after one step") {
  const auto net = square_corner_net();
  const Vector c = vec({0.25, -0.5});
  const auto r = solve_fixed_point([&](const Vector&) { return c; }, net, 1e-12, 100, 1);
  CHECK(r.converged);
  CHECK((r.point - c).norm() <= 1e-12);
  CHECK(r.iterations == 1);
}

TEST_CASE("rotation by 90 degrees has its fixed point at the center") {
  const auto net = square_corner_net();
  const auto r = solve_fixed_point(rotate90, net, 1e-9, 2000, 3);
  CHECK(r.converged);
  CHECK(r.point.norm() <= 1e-8);

  // residual certificate re-verified independently of the solver
  CHECK((rotate90(r.point) - r.point).norm() <= 1e-9);

  // hull confinement
  double sum = 0.0;
  for (double w : r.barycentric) {
    CHECK(w >= -1e-10);
    sum += w;
  }
  CHECK(std::abs(sum - 1.0) <= 1e-10);
}

TEST_CASE("oracle finds the first grid point under the identity map") {
  const auto net = segment_net();
  const Vector z = grid_oracle([](const Vector& v) { return v; }, net, 10);
  CHECK((z - net.points()[0]).norm() == 0.0);
}

TEST_CASE("oracle locates the contraction fixed point near zero") {
  const auto net = segment_net();
  const Vector z = grid_oracle([](const Vector& v) { return Vector(0.5 * v); }, net, 50);
  CHECK(std::abs(z[0]) <= grid_oracle_spacing(net, 50) + 1e-12);
}

TEST_CASE("oracle agrees with the solver on the rotation map") {
  const auto net = square_corner_net();
  const Vector oracle = grid_oracle(rotate90, net, 50);
  CHECK(oracle.norm() <= 2.0 / 50.0 * net.diameter());

  const auto solved = solve_fixed_point(rotate90, net, 1e-9, 2000, 3);
  CHECK((solved.point - oracle).norm() <= grid_oracle_spacing(net, 50) + 1e-9);
}

TEST_CASE("oracle rejects nets of affine dimension above three") {
  std::vector<Vector> pts;
  pts.push_back(Vector::Zero(4));
  for (int i = 0; i < 4; ++i) {
    Vector e = Vector::Zero(4);
    e[i] = 1.0;
    pts.push_back(e);
  }
  std::vector<LinearFunctional> fns;
  for (int i = 0; i < 4; ++i) {
    Vector c = Vector::Zero(4);
    c[i] = 1.0;
    fns.push_back({c, "e"});
  }
  EpsNet net(pts, 0.5, AdmissibleSeminorm(fns, {0.25, 0.125, 0.0625, 0.03125}, 1.0));
  CHECK_THROWS_AS(grid_oracle([](const Vector& z) { return z; }, net, 5), DimensionTooHigh);
}

TEST_CASE("map leaving the hull is rejected") {
  const auto net = segment_net();
  CHECK_THROWS_AS(
      solve_fixed_point([](const Vector&) { return testing::vec({5.0}); }, net, 1e-8, 100, 1),
      MapLeavesHull);
}

TEST_CASE("budget exhaustion is flagged, not silently accepted") {
  const auto net = square_corner_net();
  // rotation needs more than a couple of evaluations at this tolerance
  const auto r = solve_fixed_point(rotate90, net, 1e-14, 3, 1);
  CHECK(!r.converged);
  CHECK(r.residual_norm > 1e-14);
}

TEST_CASE("solver is deterministic in the seed") {
  const auto net = square_corner_net();
  const auto a = solve_fixed_point(rotate90, net, 1e-9, 2000, 7);
  const auto b = solve_fixed_point(rotate90, net, 1e-9, 2000, 7);
  CHECK((a.point - b.point).norm() == 0.0);
  CHECK(a.residual_norm == b.residual_norm);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("simplex projection returns exact barycentric coordinates") {
  const Vector w = simplex_project(vec({0.2, 0.9, -0.4}));
  CHECK(w.minCoeff() >= 0.0);
  CHECK(w.sum() == doctest::Approx(1.0).epsilon(1e-15));
  // already-feasible points are fixed
  const Vector v = simplex_project(vec({0.25, 0.25, 0.5}));
  CHECK(v[0] == doctest::Approx(0.25));
  CHECK(v[2] == doctest::Approx(0.5));
}

TEST_CASE("affine dimension detects degenerate point sets") {
  CHECK(affine_dimension({vec({1.0, 1.0})}) == 0);
  CHECK(affine_dimension({vec({0.0, 0.0}), vec({1.0, 1.0})}) == 1);
  CHECK(affine_dimension(testing::unit_square().generators()) == 2);
}
