#include "dbco/schedule.hpp"

#include <sstream>

namespace dbco {

namespace {

void check_common(double r, int p, double F1) {
  if (!(r > 0.0)) throw std::invalid_argument("schedule: r(X) must be positive");
  if (p < 1) throw std::invalid_argument("schedule: p >= 1 required");
  if (!(F1 > 0.0)) throw std::invalid_argument("schedule: F1 must be positive");
}

[[noreturn]] void violated(const std::string& name, double value,
                           const std::string& interval) {
  std::ostringstream os;
  os << "schedule: " << name << " = " << value << " outside " << interval;
  throw std::invalid_argument(os.str());
}

}  // namespace

ParameterSchedule make_theorem1_schedule(double g1, double g2, double g3, double r,
                                         int p, double F1) {
  check_common(r, p, F1);
  if (!(g1 > 0.0 && g1 < 1.0)) violated("g1", g1, "(0, 1)");
  if (!(g2 > 0.0 && g2 < g1 / 4.0)) violated("g2", g2, "(0, g1/4)");
  if (!(g3 > g2 && g3 < (g1 - 2.0 * g2) / 2.0))
    violated("g3", g3, "(g2, (g1-2*g2)/2)");
  ParameterSchedule s;
  s.variant_ = ScheduleVariant::Theorem1;
  s.a_exp_ = g1;
  s.bg_exp_ = g2;
  s.xd_exp_ = g3;
  s.r_ = r;
  s.p_ = p;
  s.f1_ = F1;
  return s;
}

ParameterSchedule make_corollary1_schedule(double g, double r, int p, double F1) {
  check_common(r, p, F1);
  if (!(g > 0.0 && g < 0.25)) violated("g", g, "(0, 1/4)");
  ParameterSchedule s;
  s.variant_ = ScheduleVariant::Corollary1;
  s.a_exp_ = g + 0.75;
  s.bg_exp_ = g;
  s.xd_exp_ = 0.25;
  s.r_ = r;
  s.p_ = p;
  s.f1_ = F1;
  return s;
}

ParameterSchedule make_corollary2_schedule(double g, double r, int p, double F1) {
  check_common(r, p, F1);
  if (!(g > 0.0 && g < 0.25)) violated("g", g, "(0, 1/4)");
  ParameterSchedule s;
  s.variant_ = ScheduleVariant::Corollary2;
  s.a_exp_ = 1.0;
  s.bg_exp_ = g;
  s.xd_exp_ = (1.0 - g) / 3.0;
  s.r_ = r;
  s.p_ = p;
  s.f1_ = F1;
  return s;
}

}  // namespace dbco
