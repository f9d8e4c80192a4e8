#pragma once

#include "schur/bigraph.hpp"
#include "schur/bounds.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace schur {

/// G(m,n,p): every one of the mn edges present independently with
/// probability p. Sampling is deterministic in (master_seed, trial_index).
struct RandomModel {
  int m = 2;
  int n = 2;
  double p = 0.5;
  std::uint64_t master_seed = 42;
};

BiGraph sample(const RandomModel& model, std::uint64_t trial_index);

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample std / sqrt(trials); 0 in exhaustive mode
  int trials = 0;
  std::vector<double> per_trial;  // per-trial estimates, trial order
  std::vector<double> per_trial_lower, per_trial_upper;
  std::vector<char> trial_converged;
  int non_converged = 0;  // trials that fell back to the upper bound
  std::string generator = "splitmix64";
};

/// Options tuned for Monte Carlo throughput; expected_norm certifies each
/// trial to `bounds.tol` and substitutes the upper bound for trials that do
/// not converge (flagged in the estimate).
struct TrialOptions {
  BoundsOptions bounds{.tol = 1e-4, .restarts = 3, .max_iters = 200};
  int threads = 0;
};

MonteCarloEstimate expected_norm(const RandomModel& model, int trials,
                                 const TrialOptions& opts = {});

/// Enumeration mode: exact expectation over all 2^(mn) graphs weighted by
/// p^edges (1-p)^(mn-edges), norms certified to 1e-10. Rejects mn > 16.
MonteCarloEstimate expected_norm_exhaustive(const RandomModel& model);

/// Exhaustive check of the sign-average inequality max ||eps . A|| <= 4M
/// over all eps in {-1,1}^(m x n). A larger than 3x3 is rejected.
struct SignAverageReport {
  double average = 0.0;    // M
  double max_lower = 0.0;  // max over eps of the certified lower bound
  Matrix extremal_sign;    // argmax eps
  std::size_t count = 0;   // 2^(mn)
  int non_converged = 0;
  bool holds = false;      // max_lower <= 4*average + 1e-9
};

SignAverageReport sign_average_bound_check(const Matrix& a);

/// Empirical check of the p = 1/2 growth bound: mean >= (1/8)sqrt(k/2) - 1
/// (within three standard errors), k = min(m,n).
struct GrowthReport {
  MonteCarloEstimate estimate;
  double bound = 0.0;
  bool holds = false;
};

GrowthReport lower_growth_check(int m, int n, int trials, std::uint64_t seed);

}  // namespace schur
