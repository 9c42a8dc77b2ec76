#include <doctest.h>

#include <cmath>

#include "dbco/benchmark.hpp"
#include "dbco/problem.hpp"
#include "dbco/rng.hpp"

using namespace dbco;

namespace {

// Single-agent l_t(x) = ||x - v||^2 with an always-inactive constraint.
class QuadTarget final : public OnlineProblem {
 public:
  QuadTarget(Vec v, double hw)
      : OnlineProblem(1, static_cast<int>(v.size()), 1, {1},
                      FeasibleSet::symmetric_box(static_cast<int>(v.size()), hw)),
        v_(std::move(v)) {
    f1_ = 1e6;
    f2_ = 1e6;
  }

  double loss(int, int, const Vec& x) const override {
    double d = dist(x, v_);
    return d * d;
  }
  Vec constraint(int, int, const Vec&) const override { return {-1.0}; }
  Vec loss_subgrad(int, int, const Vec& x) const override {
    Vec g = sub(x, v_);
    return scaled(g, 2.0);
  }
  std::vector<Vec> constraint_subgrad(int, int, const Vec& x) const override {
    return {Vec(x.size(), 0.0)};
  }

 private:
  Vec v_;
};

// Exhaustive grid search over the box at a fixed resolution; feasible means
// every window constraint nonpositive.
double grid_best_objective(const RidgeProblem& prob, int t0, int t1, double res) {
  std::vector<double> H, rows;
  Vec lin, rhs;
  double c = 0.0;
  REQUIRE(prob.quadratic_objective(t0, t1, H, lin, c));
  REQUIRE(prob.affine_constraints(t0, t1, rows, rhs));
  double hw = prob.set().inner_radius();
  long steps = std::lround(2.0 * hw / res);
  double best = 1e300;
  std::size_t nrows = rhs.size();
  for (long ix = 0; ix <= steps; ++ix) {
    double x0 = -hw + res * ix;
    for (long iy = 0; iy <= steps; ++iy) {
      double x1 = -hw + res * iy;
      bool feasible = true;
      for (std::size_t j = 0; j < nrows; ++j) {
        if (rows[2 * j] * x0 + rows[2 * j + 1] * x1 - rhs[j] > 0.0) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      double hx0 = H[0] * x0 + H[1] * x1;
      double hx1 = H[2] * x0 + H[3] * x1;
      double v = c + 0.5 * (x0 * hx0 + x1 * hx1) + lin[0] * x0 + lin[1] * x1;
      best = std::min(best, v);
    }
  }
  REQUIRE(best < 1e300);
  return best;
}

}  // namespace

TEST_SUITE_BEGIN("benchmark");

TEST_CASE("unconstrained interior target is recovered") {
  QuadTarget prob({0.7, -1.2}, 2.0);
  BenchmarkResult res = static_benchmark(prob, 1e-3);
  CHECK(res.converged);
  CHECK(dist(res.x, {0.7, -1.2}) <= 1e-3);
  CHECK(res.objective <= 1e-5);
}

TEST_CASE("exterior target projects onto the box") {
  QuadTarget prob({5.0, -0.5}, 2.0);
  BenchmarkResult res = static_benchmark(prob, 1e-3);
  Vec expect = prob.set().project({5.0, -0.5});
  CHECK(dist(res.x, expect) <= 1e-3);
}

TEST_CASE("per-round minimizer of a feasible quadratic") {
  QuadTarget prob({0.0, 0.0}, 2.0);
  BenchmarkResult res = dynamic_benchmark(prob, 1, 1e-3);
  CHECK(norm(res.x) <= 1e-3);
}

TEST_CASE("small ridge instances match an exhaustive grid oracle") {
  BenchmarkOptions opts;
  opts.max_iters = 200000;
  for (std::uint64_t seed : {101, 102}) {
    RidgeProblem prob = make_ridge_problem(
        2, 2, 3, 5e-6, seed, ridge_fixed_target_inits(seed, 2, 2));
    BenchmarkResult st = static_benchmark(prob, 1e-4, opts);
    double grid = grid_best_objective(prob, 1, 3, 1e-3);
    CHECK(std::abs(st.objective - grid) <= 2e-3);
    CHECK(st.max_violation <= 1e-4);

    BenchmarkResult dyn = dynamic_benchmark(prob, 2, 1e-4, opts);
    double dgrid = grid_best_objective(prob, 2, 2, 1e-3);
    CHECK(std::abs(dyn.objective - dgrid) <= 2e-3);
  }
}

TEST_CASE("bad windows are rejected") {
  QuadTarget prob({0.0, 0.0}, 2.0);
  CHECK_THROWS_AS((void)minimize_window(prob, 0, 1, 1e-3), std::invalid_argument);
  CHECK_THROWS_AS((void)minimize_window(prob, 1, 2, 1e-3), std::invalid_argument);
}

TEST_SUITE_END();
