#include "dbco/verify.hpp"

#include <cmath>
#include <sstream>

#include "dbco/bandit.hpp"

namespace dbco {

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << (pass ? "PASS" : "FAIL") << "  " << name << "  statistic=" << statistic
     << " threshold=" << threshold << " samples=" << samples << " seed=" << seed;
  if (!note.empty()) os << "  (" << note << ")";
  return os.str();
}

std::string VerificationReport::to_kv() const {
  std::ostringstream os;
  os << "check=" << name << " pass=" << (pass ? 1 : 0)
     << " statistic=" << statistic << " threshold=" << threshold
     << " samples=" << samples << " seed=" << seed;
  return os.str();
}

VerificationReport check_unbiasedness(const std::function<double(const Vec&)>& f,
                                      const Vec& grad_expected, const Vec& x,
                                      double delta, long N, std::uint64_t seed,
                                      const std::string& name) {
  int p = static_cast<int>(x.size());
  Vec sum(p, 0.0), sum2(p, 0.0);
  Substream rng(seed, StreamPurpose::Verify);
  Vec y(p);
  for (long k = 0; k < N; ++k) {
    Vec u = sample_unit_sphere(rng, p);
    for (int j = 0; j < p; ++j) y[j] = x[j] + delta * u[j];
    double value = f(y);
    LossGradEstimate est = estimate_loss_gradient(value, delta, u);
    for (int j = 0; j < p; ++j) {
      sum[j] += est.g[j];
      sum2[j] += est.g[j] * est.g[j];
    }
  }
  double worst = 0.0;
  for (int j = 0; j < p; ++j) {
    double mean = sum[j] / N;
    double var = std::max(0.0, sum2[j] / N - mean * mean);
    double se = N > 1 ? std::sqrt(var / N) : 0.0;
    double dev = std::abs(mean - grad_expected[j]);
    worst = std::max(worst, se > 0.0 ? dev / se
                                     : (dev == 0.0 ? 0.0 : 1e30));
  }
  VerificationReport rep;
  rep.name = name;
  rep.statistic = worst;
  rep.threshold = 4.0;
  rep.pass = worst <= rep.threshold;
  rep.samples = N;
  rep.seed = seed;
  if (N < 1000) rep.note = "low-power: N < 1000, pass/fail not meaningful";
  return rep;
}

VerificationReport check_sandwich(const std::function<double(const Vec&)>& f,
                                  double f_at_x, double F2, const Vec& x,
                                  double delta, long N, std::uint64_t seed,
                                  const std::string& name) {
  Substream dir(seed, StreamPurpose::Verify, 0, 1);
  Substream rad(seed, StreamPurpose::BallRadius, 0, 1);
  McEstimate mc = smoothed_value(f, x, delta, N, dir, rad);
  double lo = f_at_x - 3.0 * mc.std_error;
  double hi = f_at_x + F2 * delta + 3.0 * mc.std_error;
  // signed excess beyond [lo, hi]; <= 0 means inside the band
  double excess = std::max(lo - mc.mean, mc.mean - hi);
  VerificationReport rep;
  rep.name = name;
  rep.statistic = excess;
  rep.threshold = 0.0;
  rep.pass = excess <= 0.0;
  rep.samples = N;
  rep.seed = seed;
  return rep;
}

VerificationReport check_dual_bound(const RoundTrace& trace,
                                    const ParameterSchedule& sched, double F1,
                                    const std::string& name) {
  double worst = 0.0;
  long count = 0;
  for (int t = 1; t <= trace.executed_rounds(); ++t) {
    double beta = sched.beta(t);
    for (const Vec& q : trace.rounds[t - 1].q) {
      worst = std::max(worst, beta * norm(q));
      ++count;
    }
  }
  VerificationReport rep;
  rep.name = name;
  rep.statistic = worst;
  rep.threshold = F1 + 1e-9;
  rep.pass = worst <= rep.threshold;
  rep.samples = count;
  return rep;
}

VerificationReport check_estimate_norms(const RoundTrace& trace,
                                        const ParameterSchedule& sched, double F1,
                                        const std::string& name) {
  // ||ghat|| = (p/delta)|l|, ||Jhat||_F = (p/delta)||[c]_+||; both must stay
  // within (p/delta) F1, i.e. |l| <= F1 and ||[c]_+|| <= F1.
  double worst = 0.0;
  long count = 0;
  for (int t = 1; t <= trace.executed_rounds(); ++t) {
    const RoundRecord& rec = trace.rounds[t - 1];
    for (int i = 0; i < trace.n; ++i) {
      worst = std::max(worst, std::abs(rec.loss_values[i]));
      worst = std::max(worst, norm(project_nonneg(rec.cons_values[i])));
      count += 2;
    }
  }
  (void)sched;
  VerificationReport rep;
  rep.name = name;
  rep.statistic = worst;
  rep.threshold = F1 + 1e-9;
  rep.pass = worst <= rep.threshold;
  rep.samples = count;
  return rep;
}

std::string render_reports_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) os << r.to_text() << "\n";
  return os.str();
}

std::string render_reports_kv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) os << r.to_kv() << "\n";
  return os.str();
}

}  // namespace dbco
