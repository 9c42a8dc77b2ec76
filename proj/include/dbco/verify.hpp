#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dbco/algorithm.hpp"
#include "dbco/geometry.hpp"

namespace dbco {

// One executable check of an inequality the analysis relies on. Every report
// is a pure function of (seed, config).
struct VerificationReport {
  std::string name;
  double statistic = 0.0;  // measured quantity, units depend on the check
  double threshold = 0.0;  // pass iff statistic <= threshold
  bool pass = false;
  long samples = 0;
  std::uint64_t seed = 0;
  std::string note;

  std::string to_text() const;
  std::string to_kv() const;  // machine-readable key=value line
};

// Unbiasedness of the one-point estimator against the smoothed surrogate's
// gradient: compares the empirical mean of N estimates at x with
// grad_expected (analytic for affine/quadratic f). statistic = worst
// per-coordinate deviation in standard-error units; threshold = 4.
VerificationReport check_unbiasedness(const std::function<double(const Vec&)>& f,
                                      const Vec& grad_expected, const Vec& x,
                                      double delta, long N, std::uint64_t seed,
                                      const std::string& name = "unbiasedness");

// Sandwich bound f(x) <= smoothed(x) <= f(x) + F2*delta for convex
// F2-Lipschitz f, tested by Monte-Carlo within 3 standard errors.
// statistic = signed excess beyond the admissible band; threshold = 0.
VerificationReport check_sandwich(const std::function<double(const Vec&)>& f,
                                  double f_at_x, double F2, const Vec& x,
                                  double delta, long N, std::uint64_t seed,
                                  const std::string& name = "sandwich");

// Dual-variable bound beta(t) * ||q_{i,t}|| <= F1 at every round of a trace.
// statistic = worst beta(t)*||q|| observed; threshold = F1 + 1e-9.
VerificationReport check_dual_bound(const RoundTrace& trace,
                                    const ParameterSchedule& sched, double F1,
                                    const std::string& name = "dual-bound");

// Post-hoc estimator norm bounds over a trace: every recorded sampled
// value rescaled by p/delta(t) must stay within p*F1/delta(t).
VerificationReport check_estimate_norms(const RoundTrace& trace,
                                        const ParameterSchedule& sched, double F1,
                                        const std::string& name = "estimate-norms");

std::string render_reports_text(const std::vector<VerificationReport>& reports);
std::string render_reports_kv(const std::vector<VerificationReport>& reports);

}  // namespace dbco
