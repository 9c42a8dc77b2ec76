#include "dbco/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dbco {

namespace {

double global_loss(const OnlineProblem& prob, int t, const Vec& x) {
  double s = 0.0;
  for (int j = 0; j < prob.n(); ++j) s += prob.loss(j, t, x);
  return s / prob.n();
}

// ||[c_t(x)]_+|| over the stacked global constraint, agent-index order
double global_violation_norm(const OnlineProblem& prob, int t, const Vec& x) {
  double s = 0.0;
  for (int j = 0; j < prob.n(); ++j) {
    Vec c = prob.constraint(j, t, x);
    for (double v : c)
      if (v > 0.0) s += v * v;
  }
  return std::sqrt(s);
}

}  // namespace

std::vector<double> network_regret(const RoundTrace& trace,
                                   const OnlineProblem& problem,
                                   const std::vector<Vec>& comparators) {
  int T = trace.executed_rounds();
  if (static_cast<int>(comparators.size()) < T)
    throw std::invalid_argument("network_regret: comparator sequence too short");
  std::vector<double> out(T);
  double cum = 0.0;
  for (int t = 1; t <= T; ++t) {
    const RoundRecord& rec = trace.rounds[t - 1];
    double avg = 0.0;
    for (int i = 0; i < trace.n; ++i) avg += global_loss(problem, t, rec.x[i]);
    avg /= trace.n;
    cum += avg - global_loss(problem, t, comparators[t - 1]);
    out[t - 1] = cum;
  }
  return out;
}

std::vector<double> network_ccv(const RoundTrace& trace,
                                const OnlineProblem& problem) {
  int T = trace.executed_rounds();
  std::vector<double> out(T);
  double cum = 0.0;
  for (int t = 1; t <= T; ++t) {
    const RoundRecord& rec = trace.rounds[t - 1];
    double avg = 0.0;
    for (int i = 0; i < trace.n; ++i)
      avg += global_violation_norm(problem, t, rec.x[i]);
    cum += avg / trace.n;
    out[t - 1] = cum;
  }
  return out;
}

std::vector<double> cumulative_average_loss(const RoundTrace& trace,
                                            const OnlineProblem& problem) {
  int T = trace.executed_rounds();
  std::vector<double> out(T);
  double cum = 0.0;
  for (int t = 1; t <= T; ++t) {
    const RoundRecord& rec = trace.rounds[t - 1];
    for (int i = 0; i < trace.n; ++i) cum += global_loss(problem, t, rec.x[i]);
    out[t - 1] = cum / trace.n;
  }
  return out;
}

double path_length(const std::vector<Vec>& comparators) {
  if (comparators.empty())
    throw std::invalid_argument("path_length: empty sequence");
  double s = 0.0;
  for (std::size_t t = 0; t + 1 < comparators.size(); ++t)
    s += dist(comparators[t + 1], comparators[t]);
  return s;
}

GrowthFit fit_growth_exponent(const std::vector<int>& ts,
                              const std::vector<double>& values) {
  if (ts.size() != values.size() || ts.empty())
    throw std::invalid_argument("fit_growth_exponent: bad input");
  int t_max = ts.back();
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  long count = 0;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    if (2 * ts[k] <= t_max) continue;
    if (!(values[k] > 0.0))
      throw std::invalid_argument("fit_growth_exponent: nonpositive value in window");
    double x = std::log(static_cast<double>(ts[k]));
    double y = std::log(values[k]);
    sx += x; sy += y; sxx += x * x; sxy += x * y; syy += y * y;
    ++count;
  }
  if (count < 2)
    throw std::invalid_argument("fit_growth_exponent: window too small");
  double nx = static_cast<double>(count);
  double cov = sxy - sx * sy / nx;
  double varx = sxx - sx * sx / nx;
  double vary = syy - sy * sy / nx;
  GrowthFit fit;
  fit.slope = cov / varx;
  fit.r_squared = vary > 0.0 ? (cov * cov) / (varx * vary) : 1.0;
  return fit;
}

int default_metrics_cadence(int n) { return n <= 20 ? 1 : 10; }

MetricSeries compute_metric_series(const RoundTrace& trace,
                                   const OnlineProblem& problem,
                                   const Vec& static_comparator,
                                   const std::vector<Vec>* dynamic_comparators,
                                   int cadence) {
  if (cadence < 1) throw std::invalid_argument("compute_metric_series: cadence >= 1");
  int T = trace.executed_rounds();
  MetricSeries s;
  double cum_loss = 0.0, cum_static = 0.0, cum_dynamic = 0.0, cum_ccv = 0.0;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int t = 1; t <= T; ++t) {
    bool evaluated = (t % cadence == 0) || t == 1 || t == T;
    if (!evaluated) continue;
    const RoundRecord& rec = trace.rounds[t - 1];
    double avg = 0.0, viol = 0.0;
    for (int i = 0; i < trace.n; ++i) {
      avg += global_loss(problem, t, rec.x[i]);
      viol += global_violation_norm(problem, t, rec.x[i]);
    }
    avg /= trace.n;
    viol /= trace.n;
    cum_loss += avg;
    cum_ccv += viol;
    cum_static += avg - global_loss(problem, t, static_comparator);
    if (dynamic_comparators)
      cum_dynamic += avg - global_loss(problem, t, (*dynamic_comparators)[t - 1]);

    s.rounds.push_back(t);
    s.regret_static.push_back(cum_static);
    s.regret_dynamic.push_back(dynamic_comparators ? cum_dynamic : nan);
    s.ccv.push_back(cum_ccv);
    s.avg_loss.push_back(cum_loss / t);
    s.avg_ccv.push_back(cum_ccv / t);
    s.samples.push_back(trace.total_samples_at(t));
  }
  return s;
}

}  // namespace dbco
