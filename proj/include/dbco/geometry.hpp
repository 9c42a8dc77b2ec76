#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dbco {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);
double dist(const Vec& a, const Vec& b);

// y += c * x
void axpy(double c, const Vec& x, Vec& y);
Vec scaled(const Vec& x, double c);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
bool all_finite(const Vec& a);

// componentwise max(0, v)
Vec project_nonneg(Vec v);

enum class SetKind { Box, Ball };

// Convex feasible set containing the origin in its interior. Only boxes and
// Euclidean balls are supported; both have closed-form projections, which
// keeps the primal update exact. Inner/outer radii r(X) <= R(X) are computed
// at construction.
class FeasibleSet {
 public:
  static FeasibleSet box(Vec lo, Vec hi);
  static FeasibleSet symmetric_box(int dim, double halfwidth);
  static FeasibleSet ball(int dim, double radius);

  SetKind kind() const { return kind_; }
  int dim() const { return dim_; }
  double inner_radius() const { return inner_radius_; }
  double outer_radius() const { return outer_radius_; }
  const Vec& lo() const { return lo_; }
  const Vec& hi() const { return hi_; }
  double radius() const { return radius_; }

  // Euclidean projection onto the set. Idempotent; returns z unchanged when
  // z is already feasible.
  Vec project(const Vec& z) const;

  // Projection onto c*X for c in (0, 1], computed as c * P_X(z / c) so that
  // the scaling identity holds bit-for-bit.
  Vec project_scaled(double c, const Vec& z) const;

  bool contains(const Vec& z, double slack = 0.0) const;

 private:
  FeasibleSet() = default;

  SetKind kind_ = SetKind::Box;
  int dim_ = 0;
  double inner_radius_ = 0.0;
  double outer_radius_ = 0.0;
  Vec lo_, hi_;       // box
  double radius_ = 0;  // ball
};

}  // namespace dbco
