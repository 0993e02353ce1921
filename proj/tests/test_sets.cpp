#include <doctest.h>

#include <sstream>

#include "afpkit/eps_net.hpp"
#include "afpkit/errors.hpp"
#include "test_helpers.hpp"

using namespace afpkit;
using testing::vec;

TEST_CASE("sampling a single-generator body returns that generator") {
  ConvexBody point({vec({2.0, -3.0})});
  for (const auto& s : point.sample(50, 123)) {
    CHECK(s[0] == doctest::Approx(2.0));
    CHECK(s[1] == doctest::Approx(-3.0));
  }
}

TEST_CASE("segment samples stay inside the segment") {
  const auto seg = testing::segment(0.0, 1.0);
  for (const auto& s : seg.sample(1000, 7)) {
    CHECK(s[0] >= 0.0);
    CHECK(s[0] <= 1.0);
  }
}

TEST_CASE("square samples have near-zero empirical mean") {
  const auto square = testing::unit_square();
  Vector mean = Vector::Zero(2);
  const auto pts = square.sample(10000, 99);
  for (const auto& p : pts) mean += p;
  mean /= static_cast<double>(pts.size());
  CHECK(std::abs(mean[0]) < 0.05);
  CHECK(std::abs(mean[1]) < 0.05);
}

TEST_CASE("sampling is deterministic in the seed") {
  const auto square = testing::unit_square();
  const auto a = square.sample(32, 4242);
  const auto b = square.sample(32, 4242);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK((a[i] - b[i]).norm() == 0.0);
}

namespace {

AdmissibleSeminorm half_abs_seminorm() {
  // rho = 0.5 |x| on R
  return AdmissibleSeminorm({{vec({1.0}), "e1"}}, {0.5}, 0.5);
}

}  // namespace

TEST_CASE("net of a single-point body is that point") {
  ConvexBody point({vec({0.25})});
  const auto rho = AdmissibleSeminorm({{vec({1.0}), "e1"}}, {1.0}, 0.0);
  const auto net = build_eps_net(point, rho, 0.5, {vec({0.25})});
  REQUIRE(net.size() == 1);
  CHECK(net.points()[0][0] == doctest::Approx(0.25));
}

TEST_CASE("one midpoint covers the unit segment when the rho radius allows it") {
  // rho = 0.5 |.|: from p = 0.5 the farthest grid point is at rho-distance
  // 0.25, below the effective radius 0.3 * (1 - 0.1) = 0.27
  const auto seg = testing::segment(0.0, 1.0);
  const auto rho = half_abs_seminorm();
  std::vector<Vector> grid;
  grid.push_back(vec({0.5}));  // greedy start
  for (int i = 0; i <= 100; ++i) grid.push_back(vec({i / 100.0}));
  const auto net = build_eps_net(seg, rho, 0.3, grid);
  CHECK(net.size() == 1);
  CHECK(net.points()[0][0] == doctest::Approx(0.5));
}

TEST_CASE("square net coverage is certified by an independent linear scan") {
  const auto square = testing::unit_square();
  const auto rho = build_admissible(testing::coordinate_functionals(2), square);
  const double eps = 0.05;
  NetOptions opts;
  const auto grid = make_net_grid(square, rho, eps, opts.margin, {});
  const auto net = build_eps_net(square, rho, eps, grid, opts);

  // brute-force oracle over the construction grid
  for (const auto& g : grid) {
    double best = 1e300;
    for (const auto& p : net.points()) best = std::min(best, rho(g - p));
    CHECK(best < eps * (1.0 - opts.margin));
  }

  // fresh independent sample must be covered at the full radius
  const auto fresh = square.sample(1000, 31415);
  const auto report = check_coverage(net, fresh, eps);
  CHECK(report.uncovered_fraction == 0.0);
}

TEST_CASE("net points are pairwise separated by the effective radius") {
  const auto square = testing::unit_square();
  const auto rho = build_admissible(testing::coordinate_functionals(2), square);
  const double eps = 0.1;
  NetOptions opts;
  const auto grid = make_net_grid(square, rho, eps, opts.margin, {});
  const auto net = build_eps_net(square, rho, eps, grid, opts);
  REQUIRE(net.size() >= 2);
  for (std::size_t i = 0; i < net.size(); ++i)
    for (std::size_t j = i + 1; j < net.size(); ++j)
      CHECK(rho(net.points()[i] - net.points()[j]) >= eps * (1.0 - opts.margin) - 1e-12);
}

TEST_CASE("net construction is deterministic") {
  const auto square = testing::unit_square();
  const auto rho = build_admissible(testing::coordinate_functionals(2), square);
  const auto grid = make_net_grid(square, rho, 0.2, 0.1, {});
  const auto a = build_eps_net(square, rho, 0.2, grid);
  const auto b = build_eps_net(square, rho, 0.2, grid);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK((a.points()[i] - b.points()[i]).norm() == 0.0);
}

TEST_CASE("net overflow reports the cap") {
  const auto square = testing::unit_square();
  const auto rho = build_admissible(testing::coordinate_functionals(2), square);
  NetOptions opts;
  opts.max_points = 3;
  const auto grid = make_net_grid(square, rho, 0.02, opts.margin, {});
  CHECK_THROWS_AS(build_eps_net(square, rho, 0.02, grid, opts), NetOverflow);
}

TEST_CASE("net csv starts with the epsilon comment") {
  ConvexBody point({vec({1.0})});
  const auto rho = AdmissibleSeminorm({{vec({1.0}), "e1"}}, {1.0}, 0.0);
  const auto net = build_eps_net(point, rho, 0.5, {vec({1.0})});
  std::ostringstream ss;
  net.write_csv(ss);
  CHECK(ss.str().rfind("# epsilon = 0.5\n", 0) == 0);
}
