#include <doctest.h>

#include <cmath>

#include "afpkit/errors.hpp"
#include "afpkit/seminorm.hpp"
#include "test_helpers.hpp"

using namespace afpkit;
using testing::vec;

namespace {

AdmissibleSeminorm square_rho() {
  return build_admissible(testing::coordinate_functionals(2), testing::unit_square());
}

}  // namespace

TEST_CASE("rescaled weights on the square are 2^-2 and 2^-3") {
  const auto rho = square_rho();
  // raw maxima over the generators are (1, 1), so the weights equal the caps
  CHECK(rho.weights()[0] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(rho.weights()[1] == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(rho.degenerate_indices().empty());
}

TEST_CASE("evaluation is the weighted absolute sum") {
  const auto rho = square_rho();
  CHECK(rho(vec({1.0, 1.0})) == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(rho(vec({0.0, 0.0})) == 0.0);
}

TEST_CASE("evaluation is symmetric under negation") {
  const auto rho = square_rho();
  const auto pts = testing::unit_square().sample(200, 5);
  for (const auto& x : pts) CHECK(rho(-x) == doctest::Approx(rho(x)).epsilon(1e-15));
}

TEST_CASE("diameter bound: rho(x - y) stays below the geometric series sum") {
  const auto rho = square_rho();
  // independent bound: each term is at most 2 * 2^-(n+1), summing to < 1
  double series = 0.0;
  for (std::size_t n = 0; n < rho.size(); ++n) series += 2.0 * std::ldexp(1.0, -static_cast<int>(n) - 2);
  CHECK(series <= 1.0);

  const auto body = testing::unit_square();
  const auto xs = body.sample(1000, 11);
  const auto ys = body.sample(1000, 12);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double v = rho(xs[i] - ys[i]);
    CHECK(v <= series + 1e-12);
    CHECK(v <= 1.0);
    CHECK(v <= rho.body_diameter_bound() + 1e-12);
  }
}

TEST_CASE("seminorm axioms hold on randomized triples") {
  const auto rho = square_rho();
  const auto body = testing::unit_square();
  const auto audit = audit_admissible(rho, body, 10000, 2024);
  CHECK(audit.pass);
  CHECK(audit.max_subadditivity_violation <= 1e-12);
  CHECK(audit.max_homogeneity_violation <= 1e-12);
  CHECK(audit.max_rescale_excess <= 1e-12);
  CHECK(audit.min_generator_separation > 0.0);
}

TEST_CASE("reverse triangle inequality on samples") {
  const auto rho = square_rho();
  const auto body = testing::unit_square();
  const auto xs = body.sample(500, 21);
  const auto ys = body.sample(500, 22);
  for (std::size_t i = 0; i < xs.size(); ++i)
    CHECK(std::abs(rho(xs[i]) - rho(ys[i])) <= rho(xs[i] - ys[i]) + 1e-12);
}

TEST_CASE("separation failure when no functional distinguishes two generators") {
  // only e1 available, but the generators differ in the second coordinate
  std::vector<LinearFunctional> fns = {{vec({1.0, 0.0}), "e1"}};
  ConvexBody body({vec({0.5, -1.0}), vec({0.5, 1.0})});
  CHECK_THROWS_AS(build_admissible(fns, body), SeparationFailure);
}

TEST_CASE("empty inputs are rejected") {
  CHECK_THROWS_AS(build_admissible({}, testing::unit_square()), EmptyInput);
}

TEST_CASE("degenerate functional gets the default weight and a warning") {
  // e2 vanishes on a segment lying on the first axis
  ConvexBody body({vec({-1.0, 0.0}), vec({1.0, 0.0})});
  const auto rho = build_admissible(testing::coordinate_functionals(2), body);
  REQUIRE(rho.degenerate_indices().size() == 1);
  CHECK(rho.degenerate_indices()[0] == 1);
  CHECK(rho.weights()[1] == doctest::Approx(0.125));
  CHECK(rho.warnings().size() == 1);
}

TEST_CASE("dimension mismatch on evaluation") {
  const auto rho = square_rho();
  CHECK_THROWS_AS(rho(vec({1.0})), DimensionMismatch);
}

TEST_CASE("separation: distinct generators have positive rho distance") {
  const auto rho = square_rho();
  const auto& gens = testing::unit_square().generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      CHECK(rho(gens[i] - gens[j]) > 0.0);
}
