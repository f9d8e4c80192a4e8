#include "schur/random_graphs.hpp"

#include "schur/eta.hpp"

#include "doctest.h"

#include <cmath>

using namespace schur;

TEST_CASE("model validation") {
  CHECK_THROWS_AS(sample({2, 2, 0.0, 1}, 0), InputError);
  CHECK_THROWS_AS(sample({2, 2, 1.0, 1}, 0), InputError);
  CHECK_THROWS_AS(sample({0, 2, 0.5, 1}, 0), InputError);
}

TEST_CASE("sampling is deterministic per (seed, trial)") {
  const RandomModel model{5, 7, 0.3, 987654321};
  for (std::uint64_t t = 0; t < 20; ++t) {
    CHECK(sample(model, t) == sample(model, t));
  }
  CHECK(sample(model, 0) != sample(model, 1));  // overwhelmingly likely
  const RandomModel other{5, 7, 0.3, 987654322};
  CHECK(sample(model, 0) != sample(other, 0));
}

TEST_CASE("p near 1 gives full graphs") {
  const RandomModel model{3, 3, 0.999999, 7};
  for (std::uint64_t t = 0; t < 10; ++t) {
    CHECK(sample(model, t).edge_count() == 9);
  }
}

TEST_CASE("edge frequency concentrates at p = 1/2") {
  const RandomModel model{2, 2, 0.5, 20240229};
  int counts[2][2] = {};
  const int trials = 4096;
  for (int t = 0; t < trials; ++t) {
    const BiGraph g = sample(model, static_cast<std::uint64_t>(t));
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        counts[i][j] += g.bit(i, j) ? 1 : 0;
      }
    }
  }
  for (auto& row : counts) {
    for (int c : row) {
      const double freq = static_cast<double>(c) / trials;
      CHECK(freq >= 0.45);
      CHECK(freq <= 0.55);
    }
  }
}

TEST_CASE("exhaustive 2x2 expectation matches the closed form") {
  const RandomModel model{2, 2, 0.5, 1};
  const MonteCarloEstimate est = expected_norm_exhaustive(model);
  const double expected = (11.0 + 4.0 * std::sqrt(4.0 / 3.0)) / 16.0;
  CHECK(est.non_converged == 0);
  CHECK(est.mean == doctest::Approx(expected).epsilon(1e-9));
  CHECK(est.std_error == 0.0);
  CHECK_THROWS_AS(expected_norm_exhaustive({5, 4, 0.5, 1}), InputError);
}

TEST_CASE("1x1 estimate approaches p") {
  const RandomModel model{1, 1, 0.35, 4242};
  const MonteCarloEstimate est = expected_norm(model, 2000);
  CHECK(std::abs(est.mean - 0.35) <= 3.0 * est.std_error + 1e-12);
}

TEST_CASE("expected_norm is reproducible") {
  const RandomModel model{4, 4, 0.5, 11};
  const MonteCarloEstimate a = expected_norm(model, 40);
  const MonteCarloEstimate b = expected_norm(model, 40);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  CHECK(a.per_trial == b.per_trial);
}

TEST_CASE("sign-average inequality") {
  Matrix one(1, 1);
  one << 1.0;
  const SignAverageReport r1 = sign_average_bound_check(one);
  CHECK(r1.average == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r1.max_lower == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r1.holds);

  const SignAverageReport r0 = sign_average_bound_check(Matrix::Zero(2, 2));
  CHECK(r0.average == 0.0);
  CHECK(r0.max_lower == 0.0);
  CHECK(r0.holds);

  CHECK_THROWS_AS(sign_average_bound_check(Matrix::Ones(4, 2)), InputError);
}

TEST_CASE("growth bound is vacuous but recorded at desk scale") {
  const GrowthReport r8 = lower_growth_check(8, 8, 24, 5);
  CHECK(r8.bound == doctest::Approx(-0.75));
  CHECK(r8.holds);
  const GrowthReport r32 = lower_growth_check(4, 32, 8, 5);
  CHECK(r32.bound < 0.0);
  CHECK(r32.holds);
}
