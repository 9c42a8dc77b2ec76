#include "dbco/bandit.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace dbco {

Vec ConstraintJacEstimate::apply_to_dual(const Vec& q) const {
  double c = dot(coeffs, q);
  return scaled(u, c);
}

std::vector<Vec> ConstraintJacEstimate::columns() const {
  std::vector<Vec> cols;
  cols.reserve(coeffs.size());
  for (double c : coeffs) cols.push_back(scaled(u, c));
  return cols;
}

double ConstraintJacEstimate::frobenius_norm() const {
  // ||u|| = 1, so the Frobenius norm is just ||coeffs||.
  return norm(coeffs) * norm(u);
}

Vec sample_unit_sphere(Substream& rng, int p) {
  if (p < 1) throw std::invalid_argument("sample_unit_sphere: p >= 1 required");
  Vec u(p);
  for (;;) {
    for (int k = 0; k < p; ++k) u[k] = rng.gaussian();
    double n = norm(u);
    if (n > 0.0) {
      for (double& v : u) v /= n;
      return u;
    }
  }
}

Vec sample_unit_ball(Substream& dir_rng, Substream& radius_rng, int p) {
  Vec u = sample_unit_sphere(dir_rng, p);
  double r = std::pow(radius_rng.uniform(), 1.0 / p);
  for (double& v : u) v *= r;
  return u;
}

LossGradEstimate estimate_loss_gradient(double value, double delta, const Vec& u) {
  if (!(delta > 0.0))
    throw std::invalid_argument("estimate_loss_gradient: delta must be positive");
  int p = static_cast<int>(u.size());
  LossGradEstimate est;
  est.g = scaled(u, p / delta * value);
  est.delta = delta;
  est.samples_used = 1;
  return est;
}

ConstraintJacEstimate estimate_constraint_jacobian(const Vec& values, double delta,
                                                   const Vec& u) {
  if (!(delta > 0.0))
    throw std::invalid_argument("estimate_constraint_jacobian: delta must be positive");
  int p = static_cast<int>(u.size());
  ConstraintJacEstimate est;
  est.coeffs = project_nonneg(values);
  for (double& c : est.coeffs) c *= p / delta;
  est.u = u;
  est.delta = delta;
  est.samples_used = 1;
  return est;
}

LossGradEstimate estimate_two_point(double value_plus, double value_minus,
                                    double delta, const Vec& u) {
  if (!(delta > 0.0))
    throw std::invalid_argument("estimate_two_point: delta must be positive");
  int p = static_cast<int>(u.size());
  LossGradEstimate est;
  est.g = scaled(u, p / (2.0 * delta) * (value_plus - value_minus));
  est.delta = delta;
  est.samples_used = 2;
  return est;
}

ConstraintJacEstimate estimate_constraint_jacobian_two_point(
    const Vec& values_plus, const Vec& values_minus, double delta, const Vec& u) {
  if (!(delta > 0.0))
    throw std::invalid_argument("estimate_constraint_jacobian_two_point: delta must be positive");
  if (values_plus.size() != values_minus.size())
    throw std::invalid_argument("estimate_constraint_jacobian_two_point: size mismatch");
  int p = static_cast<int>(u.size());
  ConstraintJacEstimate est;
  Vec plus = project_nonneg(values_plus);
  Vec minus = project_nonneg(values_minus);
  est.coeffs.resize(plus.size());
  for (std::size_t k = 0; k < plus.size(); ++k)
    est.coeffs[k] = p / (2.0 * delta) * (plus[k] - minus[k]);
  est.u = u;
  est.delta = delta;
  est.samples_used = 2;
  return est;
}

McEstimate smoothed_value(const std::function<double(const Vec&)>& f, const Vec& x,
                          double delta, long n_mc, Substream& dir_rng,
                          Substream& radius_rng) {
  if (n_mc < 1) throw std::invalid_argument("smoothed_value: n_mc >= 1 required");
  int p = static_cast<int>(x.size());
  double sum = 0.0, sum2 = 0.0;
  Vec y(x.size());
  for (long k = 0; k < n_mc; ++k) {
    Vec v = sample_unit_ball(dir_rng, radius_rng, p);
    for (std::size_t j = 0; j < y.size(); ++j) y[j] = x[j] + delta * v[j];
    double fv = f(y);
    sum += fv;
    sum2 += fv * fv;
  }
  McEstimate est;
  est.samples = n_mc;
  est.mean = sum / n_mc;
  double var = std::max(0.0, sum2 / n_mc - est.mean * est.mean);
  est.std_error = n_mc > 1 ? std::sqrt(var / n_mc) : 0.0;
  return est;
}

}  // namespace dbco
