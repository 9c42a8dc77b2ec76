#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dbco/geometry.hpp"
#include "dbco/rng.hpp"

namespace dbco {

// Online problem instance: per-agent, per-round loss and constraint oracles
// plus exact subgradients for offline metrics. Rounds are 1-based. F1 bounds
// |l_{i,t}| and ||c_{i,t}|| over X; F2 bounds the subgradient norms.
class OnlineProblem {
 public:
  virtual ~OnlineProblem() = default;

  int n() const { return n_; }
  int p() const { return p_; }
  int horizon() const { return horizon_; }
  int m(int i) const { return m_[i]; }
  const std::vector<int>& dims() const { return m_; }
  const FeasibleSet& set() const { return set_; }
  double f1() const { return f1_; }
  double f2() const { return f2_; }
  double strong_convexity() const { return mu_; }

  virtual double loss(int i, int t, const Vec& x) const = 0;
  virtual Vec constraint(int i, int t, const Vec& x) const = 0;
  virtual Vec loss_subgrad(int i, int t, const Vec& x) const = 0;
  // columns of the p x m_i constraint Jacobian
  virtual std::vector<Vec> constraint_subgrad(int i, int t, const Vec& x) const = 0;

  // Optional fast paths for the offline benchmark solvers. When available,
  // sum_{t in [t0, t1]} l_t(x) = 0.5 x'Hx + lin'x + c (H row-major p x p) and
  // the stacked constraints over the window are rows*x <= rhs.
  virtual bool quadratic_objective(int t0, int t1, std::vector<double>& H,
                                   Vec& lin, double& c) const {
    (void)t0; (void)t1; (void)H; (void)lin; (void)c;
    return false;
  }
  virtual bool affine_constraints(int t0, int t1, std::vector<double>& rows,
                                  Vec& rhs) const {
    (void)t0; (void)t1; (void)rows; (void)rhs;
    return false;
  }

 protected:
  OnlineProblem(int n, int p, int horizon, std::vector<int> m, FeasibleSet set)
      : n_(n), p_(p), horizon_(horizon), m_(std::move(m)), set_(std::move(set)) {}

  int n_, p_, horizon_;
  std::vector<int> m_;
  FeasibleSet set_;
  double f1_ = 0.0, f2_ = 0.0, mu_ = 0.0;
};

// Distributed online ridge regression with time-varying linear inequality
// constraints:
//   l_{i,t}(x) = 0.5 (a_{i,t}'x - m_{i,t})^2 + lambda ||x||^2
//   c_{i,t}(x) = B_{i,t} x - b_{i,t}            (m_i = 2 rows)
// with a uniform in [-5,5]^p, B uniform in [0,2]^{2xp}, b uniform in [0,1]^2
// and labels m_{i,t} = a_{i,t}'x_init_i + ups_{i,t}/(4t), ups uniform [0,1].
//
// All randomness is a pure function of (seed, agent, round), so the instance
// is frozen without materializing n*T records; F1 and F2 are certified over
// the box by interval bounds at construction.
class RidgeProblem final : public OnlineProblem {
 public:
  RidgeProblem(int n, int p, int horizon, double lambda, std::uint64_t seed,
               std::vector<Vec> x_init, double halfwidth = 2.0);

  double loss(int i, int t, const Vec& x) const override;
  Vec constraint(int i, int t, const Vec& x) const override;
  Vec loss_subgrad(int i, int t, const Vec& x) const override;
  std::vector<Vec> constraint_subgrad(int i, int t, const Vec& x) const override;

  bool quadratic_objective(int t0, int t1, std::vector<double>& H, Vec& lin,
                           double& c) const override;
  bool affine_constraints(int t0, int t1, std::vector<double>& rows,
                          Vec& rhs) const override;

  double lambda() const { return lambda_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<Vec>& x_init() const { return x_init_; }

  Vec feature(int i, int t) const;                    // a_{i,t}
  double label(int i, int t) const;                   // m_{i,t}
  void constraint_data(int i, int t, std::vector<double>& B, Vec& b) const;

  std::string to_json() const;
  static RidgeProblem from_json(const std::string& text);

 private:
  void certify_bounds();

  double lambda_;
  std::uint64_t seed_;
  std::vector<Vec> x_init_;
  double halfwidth_;
};

// Fallback initial points decoupled from the algorithm: a fixed hidden
// target per agent, uniform in the halved box.
std::vector<Vec> ridge_fixed_target_inits(std::uint64_t seed, int n, int p,
                                          double halfwidth = 2.0);

RidgeProblem make_ridge_problem(int n, int p, int horizon, double lambda,
                                std::uint64_t seed, std::vector<Vec> x_init,
                                double halfwidth = 2.0);

}  // namespace dbco
