#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace dbco {

enum class ScheduleVariant { Theorem1, Corollary1, Corollary2 };

// The five step-size sequences driving the primal-dual updates:
//   alpha(t) = r^2 / (20 p^2 F1^2 (t+1)^a_exp)   primal step
//   beta(t)  = 2 / t^bg_exp                       dual damping
//   gamma(t) = 1 / t^(1 - bg_exp)                 dual step
//   xi(t)    = 1 / (t+1)^xd_exp                   set shrinkage
//   delta(t) = r / (t+1)^xd_exp                   exploration radius
// so beta(t) * gamma(t) = 2/t and delta(t) = r * xi(t) always.
//
// Exponent constraints per variant:
//   Theorem1:   a_exp = g1 in (0,1), bg_exp = g2 in (0, g1/4),
//               xd_exp = g3 in (g2, (g1 - 2 g2)/2)
//   Corollary1: free g in (0, 1/4); g1 = g + 3/4, g2 = g, g3 = 1/4
//   Corollary2: free g in (0, 1/4); a_exp = 1, bg_exp = g, xd_exp = (1-g)/3
class ParameterSchedule {
 public:
  ScheduleVariant variant() const { return variant_; }
  double r() const { return r_; }
  int p() const { return p_; }
  double f1() const { return f1_; }
  double alpha_exponent() const { return a_exp_; }
  double beta_gamma_exponent() const { return bg_exp_; }
  double shrink_exponent() const { return xd_exp_; }

  double alpha(int t) const {
    return r_ * r_ / (20.0 * p_ * p_ * f1_ * f1_ * std::pow(t + 1.0, a_exp_));
  }
  double beta(int t) const { return 2.0 / std::pow(static_cast<double>(t), bg_exp_); }
  double gamma(int t) const {
    return 1.0 / std::pow(static_cast<double>(t), 1.0 - bg_exp_);
  }
  double xi(int t) const { return 1.0 / std::pow(t + 1.0, xd_exp_); }
  double delta(int t) const { return r_ / std::pow(t + 1.0, xd_exp_); }

  friend ParameterSchedule make_theorem1_schedule(double, double, double, double,
                                                  int, double);
  friend ParameterSchedule make_corollary1_schedule(double, double, int, double);
  friend ParameterSchedule make_corollary2_schedule(double, double, int, double);

 private:
  ParameterSchedule() = default;

  ScheduleVariant variant_ = ScheduleVariant::Theorem1;
  double a_exp_ = 0, bg_exp_ = 0, xd_exp_ = 0;
  double r_ = 0;
  int p_ = 0;
  double f1_ = 0;
};

// Throws std::invalid_argument naming the violated interval.
ParameterSchedule make_theorem1_schedule(double g1, double g2, double g3, double r,
                                         int p, double F1);
ParameterSchedule make_corollary1_schedule(double g, double r, int p, double F1);
ParameterSchedule make_corollary2_schedule(double g, double r, int p, double F1);

}  // namespace dbco
