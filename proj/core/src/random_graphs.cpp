#include "schur/random_graphs.hpp"

#include "schur/rng.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace schur {

namespace {

void validate(const RandomModel& model) {
  if (model.m < 1 || model.n < 1) {
    throw InputError("random model: dimensions must be positive");
  }
  if (!(model.p > 0.0 && model.p < 1.0)) {
    throw InputError("random model: p must lie strictly between 0 and 1");
  }
}

// Mean and standard error with order-independent aggregation: values are
// summed in sorted order so concurrent trial scheduling cannot change the
// result.
void sorted_moments(const std::vector<double>& values, double& mean,
                    double& std_error) {
  std::vector<double> sorted(values);
  std::sort(sorted.begin(), sorted.end());
  double sum = 0.0;
  for (double v : sorted) sum += v;
  const auto n = static_cast<double>(sorted.size());
  mean = sum / n;
  if (sorted.size() < 2) {
    std_error = 0.0;
    return;
  }
  double ss = 0.0;
  for (double v : sorted) ss += (v - mean) * (v - mean);
  std_error = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
}

int thread_count(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

BiGraph sample(const RandomModel& model, std::uint64_t trial_index) {
  validate(model);
  SplitMix64 rng = SplitMix64::forked(model.master_seed, trial_index);
  BiGraph g(static_cast<std::size_t>(model.m),
            static_cast<std::size_t>(model.n));
  for (int i = 0; i < model.m; ++i) {
    for (int j = 0; j < model.n; ++j) {
      g.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
            rng.next_double() < model.p);
    }
  }
  return g;
}

MonteCarloEstimate expected_norm(const RandomModel& model, int trials,
                                 const TrialOptions& opts) {
  validate(model);
  if (trials < 1) throw InputError("expected_norm: trials must be >= 1");
  MonteCarloEstimate est;
  est.trials = trials;
  est.per_trial.assign(static_cast<std::size_t>(trials), 0.0);
  est.per_trial_lower.assign(static_cast<std::size_t>(trials), 0.0);
  est.per_trial_upper.assign(static_cast<std::size_t>(trials), 0.0);
  est.trial_converged.assign(static_cast<std::size_t>(trials), 0);

  const int nthreads = thread_count(opts.threads);
  std::vector<std::thread> pool;
  for (int tid = 0; tid < nthreads; ++tid) {
    pool.emplace_back([&, tid]() {
      for (int t = tid; t < trials; t += nthreads) {
        const BiGraph g = sample(model, static_cast<std::uint64_t>(t));
        const NormBounds nb = norm_bounds(g.to_matrix(), opts.bounds);
        est.per_trial[static_cast<std::size_t>(t)] =
            nb.converged ? nb.midpoint() : nb.upper;
        est.per_trial_lower[static_cast<std::size_t>(t)] = nb.lower;
        est.per_trial_upper[static_cast<std::size_t>(t)] = nb.upper;
        est.trial_converged[static_cast<std::size_t>(t)] =
            nb.converged ? 1 : 0;
      }
    });
  }
  for (auto& th : pool) th.join();
  est.non_converged = static_cast<int>(
      std::count(est.trial_converged.begin(), est.trial_converged.end(), 0));
  sorted_moments(est.per_trial, est.mean, est.std_error);
  return est;
}

MonteCarloEstimate expected_norm_exhaustive(const RandomModel& model) {
  validate(model);
  const int cells = model.m * model.n;
  if (cells > 16) {
    throw InputError("expected_norm_exhaustive: limited to mn <= 16 cells");
  }
  // The witness construction floors out around 1e-10 per graph, so trials
  // certify at 1e-8; midpoint bias stays near 1e-10, far inside the 1e-9
  // budget of the exact-expectation check.
  BoundsOptions tight;
  tight.tol = 1e-8;
  tight.max_iters = 1000;

  MonteCarloEstimate est;
  est.trials = 1 << cells;
  est.per_trial.reserve(static_cast<std::size_t>(est.trials));
  double mean = 0.0;
  for (std::uint32_t pattern = 0; pattern < (1u << cells); ++pattern) {
    BiGraph g(static_cast<std::size_t>(model.m),
              static_cast<std::size_t>(model.n));
    int edges = 0;
    for (int c = 0; c < cells; ++c) {
      if (pattern & (1u << c)) {
        g.set(static_cast<std::size_t>(c / model.n),
              static_cast<std::size_t>(c % model.n), true);
        ++edges;
      }
    }
    const NormBounds nb = norm_bounds(g.to_matrix(), tight);
    const double value = nb.converged ? nb.midpoint() : nb.upper;
    if (!nb.converged) ++est.non_converged;
    est.per_trial.push_back(value);
    est.per_trial_lower.push_back(nb.lower);
    est.per_trial_upper.push_back(nb.upper);
    est.trial_converged.push_back(nb.converged ? 1 : 0);
    const double weight = std::pow(model.p, edges) *
                          std::pow(1.0 - model.p, cells - edges);
    mean += weight * value;
  }
  est.mean = mean;
  est.std_error = 0.0;
  return est;
}

SignAverageReport sign_average_bound_check(const Matrix& a) {
  if (a.rows() > 3 || a.cols() > 3) {
    throw InputError("sign_average_bound_check: exhaustive sweep needs <= 3x3");
  }
  const int cells = static_cast<int>(a.rows() * a.cols());
  BoundsOptions opts;  // defaults: tol 1e-6

  SignAverageReport rep;
  rep.count = 1ULL << cells;
  std::vector<double> mids;
  mids.reserve(rep.count);
  for (std::uint32_t pattern = 0; pattern < (1u << cells); ++pattern) {
    Matrix eps(a.rows(), a.cols());
    for (int c = 0; c < cells; ++c) {
      eps(c / a.cols(), c % a.cols()) = (pattern & (1u << c)) ? 1.0 : -1.0;
    }
    const NormBounds nb = norm_bounds(a.cwiseProduct(eps), opts);
    if (!nb.converged) ++rep.non_converged;
    mids.push_back(nb.converged ? nb.midpoint() : nb.upper);
    if (nb.lower > rep.max_lower) {
      rep.max_lower = nb.lower;
      rep.extremal_sign = eps;
    }
  }
  double std_err = 0.0;
  sorted_moments(mids, rep.average, std_err);
  rep.holds = rep.max_lower <= 4.0 * rep.average + 1e-9;
  return rep;
}

GrowthReport lower_growth_check(int m, int n, int trials, std::uint64_t seed) {
  GrowthReport rep;
  RandomModel model{m, n, 0.5, seed};
  rep.estimate = expected_norm(model, trials);
  const double k = static_cast<double>(std::min(m, n));
  rep.bound = 0.125 * std::sqrt(k / 2.0) - 1.0;
  rep.holds = rep.estimate.mean >= rep.bound - 3.0 * rep.estimate.std_error;
  return rep;
}

}  // namespace schur
