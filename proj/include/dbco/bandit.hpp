#pragma once

#include <functional>
#include <vector>

#include "dbco/geometry.hpp"
#include "dbco/rng.hpp"

namespace dbco {

// One-point gradient estimate g = (p/delta) * value * u built from a single
// oracle query at x = e + delta*u. Its norm is bounded by p*F1/delta
// whenever |value| <= F1.
struct LossGradEstimate {
  Vec g;
  double delta = 0.0;
  int samples_used = 0;
};

// Rank-one Jacobian estimate for the clipped constraints: column k is
// (p/delta) * max(0, values[k]) * u. Stored in factored form.
struct ConstraintJacEstimate {
  Vec coeffs;  // (p/delta) * [values]_+, length m
  Vec u;       // unit direction, length p
  double delta = 0.0;
  int samples_used = 0;

  // J * q = (coeffs . q) * u
  Vec apply_to_dual(const Vec& q) const;
  std::vector<Vec> columns() const;
  double frobenius_norm() const;
};

// Uniform draw on the unit sphere S^p: normalize a vector of independent
// standard Gaussians, redrawing on the measure-zero all-zeros event.
Vec sample_unit_sphere(Substream& rng, int p);

// Uniform draw in the unit ball B^p: sphere direction scaled by U^(1/p).
Vec sample_unit_ball(Substream& dir_rng, Substream& radius_rng, int p);

LossGradEstimate estimate_loss_gradient(double value, double delta, const Vec& u);

ConstraintJacEstimate estimate_constraint_jacobian(const Vec& values, double delta,
                                                   const Vec& u);

// Two-point diagnostic estimator (p/(2 delta)) * (value_plus - value_minus) * u
// with samples_used = 2; used only for sample-count comparison runs.
LossGradEstimate estimate_two_point(double value_plus, double value_minus,
                                    double delta, const Vec& u);

ConstraintJacEstimate estimate_constraint_jacobian_two_point(
    const Vec& values_plus, const Vec& values_minus, double delta, const Vec& u);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long samples = 0;
};

// Monte-Carlo estimate of the delta-smoothed surrogate
// E_{v in B^p}[ f(x + delta*v) ].
McEstimate smoothed_value(const std::function<double(const Vec&)>& f, const Vec& x,
                          double delta, long n_mc, Substream& dir_rng,
                          Substream& radius_rng);

}  // namespace dbco
