#include <doctest.h>

#include <cmath>

#include "dbco/bandit.hpp"

using namespace dbco;

TEST_SUITE_BEGIN("bandit");

TEST_CASE("one-point loss gradient examples") {
  LossGradEstimate est = estimate_loss_gradient(3.0, 0.5, {0.0, 1.0});
  CHECK(est.g == Vec{0.0, 12.0});
  CHECK(est.samples_used == 1);

  CHECK(estimate_loss_gradient(0.0, 0.5, {0.0, 1.0}).g == Vec{0.0, 0.0});

  // bound p*F1/delta attained at |value| = F1
  double F1 = 3.0;
  CHECK(norm(estimate_loss_gradient(F1, 0.5, {0.6, 0.8}).g) ==
        doctest::Approx(2.0 * F1 / 0.5).epsilon(1e-14));
  CHECK_THROWS_AS((void)estimate_loss_gradient(1.0, 0.0, {1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)estimate_loss_gradient(1.0, -0.1, {1.0}),
                  std::invalid_argument);
}

TEST_CASE("one-point constraint jacobian examples") {
  ConstraintJacEstimate est = estimate_constraint_jacobian({2.0}, 1.0, {1.0, 0.0});
  CHECK(est.columns() == std::vector<Vec>{{4.0, 0.0}});
  CHECK(est.samples_used == 1);

  ConstraintJacEstimate zero =
      estimate_constraint_jacobian({-1.0, -0.5}, 1.0, {1.0, 0.0});
  CHECK(zero.columns() == std::vector<Vec>{{0.0, 0.0}, {0.0, 0.0}});
  CHECK(zero.frobenius_norm() == 0.0);

  ConstraintJacEstimate mixed =
      estimate_constraint_jacobian({1.0, -1.0}, 1.0, {0.0, 1.0});
  CHECK(mixed.columns() == std::vector<Vec>{{0.0, 2.0}, {0.0, 0.0}});
  CHECK_THROWS_AS((void)estimate_constraint_jacobian({1.0}, 0.0, {1.0}),
                  std::invalid_argument);
}

TEST_CASE("jacobian columns are nonnegative multiples of u") {
  Vec u = {0.6, -0.8};
  ConstraintJacEstimate est = estimate_constraint_jacobian({0.5, -2.0, 3.0}, 0.25, u);
  for (double c : est.coeffs) CHECK(c >= 0.0);
  CHECK(est.coeffs[1] == 0.0);
  auto cols = est.columns();
  for (std::size_t k = 0; k < cols.size(); ++k) {
    CHECK(cols[k][0] == est.coeffs[k] * u[0]);
    CHECK(cols[k][1] == est.coeffs[k] * u[1]);
  }
}

TEST_CASE("apply_to_dual matches explicit column sum") {
  ConstraintJacEstimate est =
      estimate_constraint_jacobian({1.0, 2.0}, 0.5, {0.8, 0.6});
  Vec q = {0.3, 0.7};
  Vec direct(2, 0.0);
  auto cols = est.columns();
  for (std::size_t k = 0; k < cols.size(); ++k) axpy(q[k], cols[k], direct);
  Vec fast = est.apply_to_dual(q);
  CHECK(fast[0] == doctest::Approx(direct[0]).epsilon(1e-14));
  CHECK(fast[1] == doctest::Approx(direct[1]).epsilon(1e-14));
}

TEST_CASE("two-point estimator examples") {
  CHECK(estimate_two_point(2.0, 2.0, 0.5, {1.0, 0.0}).g == Vec{0.0, 0.0});
  LossGradEstimate est = estimate_two_point(3.0, 1.0, 0.5, {1.0, 0.0});
  CHECK(est.g == Vec{4.0, 0.0});
  CHECK(est.samples_used == 2);
  CHECK_THROWS_AS((void)estimate_two_point(1.0, 0.0, 0.0, {1.0}),
                  std::invalid_argument);

  ConstraintJacEstimate cj = estimate_constraint_jacobian_two_point(
      {2.0, -1.0}, {1.0, -2.0}, 1.0, {0.0, 1.0});
  CHECK(cj.coeffs == Vec{1.0, 0.0});
  CHECK(cj.samples_used == 2);
}

TEST_CASE("two-point estimator is unbiased for affine losses") {
  // l(y) = a'y: (p/2delta)(l(x+du) - l(x-du)) u = p (a'u) u, E = a
  Vec a = {1.5, -0.5, 2.0};
  Vec x = {0.1, 0.2, -0.3};
  double delta = 0.3;
  Substream rng(17, StreamPurpose::Verify);
  const long N = 1000000;
  Vec mean(3, 0.0);
  for (long k = 0; k < N; ++k) {
    Vec u = sample_unit_sphere(rng, 3);
    Vec xp = x, xm = x;
    axpy(delta, u, xp);
    axpy(-delta, u, xm);
    LossGradEstimate est = estimate_two_point(dot(a, xp), dot(a, xm), delta, u);
    axpy(1.0 / N, est.g, mean);
  }
  for (int j = 0; j < 3; ++j) CHECK(std::abs(mean[j] - a[j]) < 0.01);
}

TEST_CASE("sphere samples are unit vectors") {
  Substream rng(3, StreamPurpose::Sphere);
  for (int p : {1, 2, 5, 16}) {
    for (int k = 0; k < 100; ++k) {
      Vec u = sample_unit_sphere(rng, p);
      CHECK(std::abs(norm(u) - 1.0) <= 1e-12);
      if (p == 1) CHECK((u[0] == 1.0 || u[0] == -1.0));
    }
  }
}

TEST_CASE("sphere sampling is mean-zero") {
  Substream rng(4, StreamPurpose::Sphere);
  const long N = 1000000;
  Vec mean(3, 0.0);
  for (long k = 0; k < N; ++k) {
    Vec u = sample_unit_sphere(rng, 3);
    for (int j = 0; j < 3; ++j) mean[j] += u[j] / N;
  }
  for (int j = 0; j < 3; ++j) CHECK(std::abs(mean[j]) < 0.005);
}

TEST_CASE("ball samples stay inside the unit ball") {
  Substream dir(5, StreamPurpose::Sphere);
  Substream rad(5, StreamPurpose::BallRadius);
  for (int k = 0; k < 1000; ++k) {
    Vec v = sample_unit_ball(dir, rad, 4);
    CHECK(norm(v) <= 1.0 + 1e-12);
  }
}

TEST_CASE("smoothed value of a constant is exact") {
  Substream dir(6, StreamPurpose::Sphere);
  Substream rad(6, StreamPurpose::BallRadius);
  auto f = [](const Vec&) { return 7.25; };
  McEstimate mc = smoothed_value(f, {0.0, 0.0}, 0.5, 100, dir, rad);
  CHECK(mc.mean == 7.25);
  CHECK(mc.std_error == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("smoothing of an affine function changes nothing") {
  Substream dir(7, StreamPurpose::Sphere);
  Substream rad(7, StreamPurpose::BallRadius);
  Vec a = {2.0, -1.0};
  Vec x = {0.3, 0.4};
  auto f = [&](const Vec& y) { return dot(a, y) + 1.0; };
  McEstimate mc = smoothed_value(f, x, 0.5, 100000, dir, rad);
  CHECK(std::abs(mc.mean - f(x)) <= 3.0 * mc.std_error);
}

TEST_CASE("smoothed squared norm matches the closed-form moment") {
  // E_{v in B^p} ||delta v||^2 = delta^2 p/(p+2) = 0.5 for p=2, delta=1
  Substream dir(8, StreamPurpose::Sphere);
  Substream rad(8, StreamPurpose::BallRadius);
  auto f = [](const Vec& y) { return dot(y, y); };
  McEstimate mc = smoothed_value(f, {0.0, 0.0}, 1.0, 200000, dir, rad);
  CHECK(std::abs(mc.mean - 0.5) <= 3.0 * mc.std_error);
  CHECK(mc.std_error < 0.01);
}

TEST_SUITE_END();
