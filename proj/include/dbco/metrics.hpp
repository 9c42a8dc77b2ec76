#pragma once

#include <vector>

#include "dbco/algorithm.hpp"
#include "dbco/problem.hpp"

namespace dbco {

// Cumulative network regret (Eq. 3 of the analysis this follows):
//   (1/n) sum_i sum_{s<=t} l_s(x_{i,s}) - sum_{s<=t} l_s(y_s)
// with l_s the global average loss and y the comparator sequence. Evaluated
// with the exact loss oracles; metric evaluation never counts as algorithm
// samples. Returns the full series, one entry per executed round.
std::vector<double> network_regret(const RoundTrace& trace,
                                   const OnlineProblem& problem,
                                   const std::vector<Vec>& comparators);

// Cumulative network CCV: (1/n) sum_i sum_{s<=t} ||[c_s(x_{i,s})]_+|| with
// c_s the global constraint stacked by agent index.
std::vector<double> network_ccv(const RoundTrace& trace,
                                const OnlineProblem& problem);

// Cumulative average loss (1/n) sum_i sum_{s<=t} l_s(x_{i,s}).
std::vector<double> cumulative_average_loss(const RoundTrace& trace,
                                            const OnlineProblem& problem);

// P_T = sum_{t=1}^{T-1} ||y_{t+1} - y_t||
double path_length(const std::vector<Vec>& comparators);

struct GrowthFit {
  double slope = 0.0;
  double r_squared = 0.0;
};

// Least-squares slope of log(values) vs log(t) over the last half of the
// window (entries with t > max_t / 2). Throws on nonpositive values there.
GrowthFit fit_growth_exponent(const std::vector<int>& ts,
                              const std::vector<double>& values);

// Per-round metric rows assembled at a sampling cadence. Terms are computed
// only at evaluated rounds and the cumulative columns accumulate those terms
// alone (exact for cadence 1; a documented subsample otherwise - values are
// never interpolated).
struct MetricSeries {
  std::vector<int> rounds;
  std::vector<double> regret_static;
  std::vector<double> regret_dynamic;  // NaN when dynamic comparators absent
  std::vector<double> ccv;
  std::vector<double> avg_loss;  // cumulative loss / (n * t)
  std::vector<double> avg_ccv;   // ccv / t
  std::vector<long> samples;     // network-wide cumulative
};

int default_metrics_cadence(int n);

MetricSeries compute_metric_series(const RoundTrace& trace,
                                   const OnlineProblem& problem,
                                   const Vec& static_comparator,
                                   const std::vector<Vec>* dynamic_comparators,
                                   int cadence = 1);

}  // namespace dbco
