#pragma once

#include "dbco/problem.hpp"

namespace dbco {

struct BenchmarkOptions {
  long max_iters = 100000;       // subgradient iteration cap
  double step_scale = 0.0;       // initial step c0, decays geometrically; 0 = R(X)
  double penalty_init = 0.0;     // initial hinge penalty weight; 0 = auto
  int penalty_doublings = 12;    // weight doubles when the best point violates
  bool throw_on_failure = true;  // diagnostic error on nonconvergence
};

struct BenchmarkResult {
  Vec x;
  double objective = 0.0;      // sum of window losses at x
  double max_violation = 0.0;  // max over window constraints at x
  long iters = 0;
  bool converged = false;
};

// Offline comparator oracle: minimizes the window objective
// sum_{t in [t0, t1]} l_t(x) over {x in X : c_{i,t}(x) <= 0 for the window}
// by deterministic projected subgradient descent on the hinge-penalized
// objective with diminishing steps and best-iterate tracking. Used only by
// metrics, never by the online algorithm.
BenchmarkResult minimize_window(const OnlineProblem& problem, int t0, int t1,
                                double tol, const BenchmarkOptions& opts = {});

// Minimizer of sum_t l_t subject to every round's constraints.
BenchmarkResult static_benchmark(const OnlineProblem& problem, double tol,
                                 const BenchmarkOptions& opts = {});

// Per-round minimizer of l_t subject to c_t <= 0.
BenchmarkResult dynamic_benchmark(const OnlineProblem& problem, int t, double tol,
                                  const BenchmarkOptions& opts = {});

}  // namespace dbco
