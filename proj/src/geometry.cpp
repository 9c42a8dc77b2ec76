#include "dbco/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dbco {

double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

double dist(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dist: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

void axpy(double c, const Vec& x, Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("axpy: dimension mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += c * x[i];
}

Vec scaled(const Vec& x, double c) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
  return r;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  axpy(1.0, b, r);
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  axpy(-1.0, b, r);
  return r;
}

bool all_finite(const Vec& a) {
  for (double v : a)
    if (!std::isfinite(v)) return false;
  return true;
}

Vec project_nonneg(Vec v) {
  for (double& x : v) x = std::max(0.0, x);
  return v;
}

FeasibleSet FeasibleSet::box(Vec lo, Vec hi) {
  if (lo.size() != hi.size() || lo.empty())
    throw std::invalid_argument("FeasibleSet::box: bad bounds");
  FeasibleSet s;
  s.kind_ = SetKind::Box;
  s.dim_ = static_cast<int>(lo.size());
  double r = std::numeric_limits<double>::infinity();
  double R2 = 0.0;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (!(lo[i] < 0.0 && 0.0 < hi[i]))
      throw std::invalid_argument("FeasibleSet::box: 0 must be interior");
    r = std::min(r, std::min(-lo[i], hi[i]));
    R2 += std::max(lo[i] * lo[i], hi[i] * hi[i]);
  }
  s.inner_radius_ = r;
  s.outer_radius_ = std::sqrt(R2);
  s.lo_ = std::move(lo);
  s.hi_ = std::move(hi);
  return s;
}

FeasibleSet FeasibleSet::symmetric_box(int dim, double halfwidth) {
  if (dim < 1 || halfwidth <= 0.0)
    throw std::invalid_argument("FeasibleSet::symmetric_box: bad arguments");
  return box(Vec(dim, -halfwidth), Vec(dim, halfwidth));
}

FeasibleSet FeasibleSet::ball(int dim, double radius) {
  if (dim < 1 || radius <= 0.0)
    throw std::invalid_argument("FeasibleSet::ball: bad arguments");
  FeasibleSet s;
  s.kind_ = SetKind::Ball;
  s.dim_ = dim;
  s.radius_ = radius;
  s.inner_radius_ = radius;
  s.outer_radius_ = radius;
  return s;
}

Vec FeasibleSet::project(const Vec& z) const {
  if (static_cast<int>(z.size()) != dim_)
    throw std::invalid_argument("FeasibleSet::project: dimension mismatch");
  Vec r(z.size());
  if (kind_ == SetKind::Box) {
    for (std::size_t i = 0; i < z.size(); ++i)
      r[i] = std::min(hi_[i], std::max(lo_[i], z[i]));
  } else {
    double n = norm(z);
    if (n <= radius_) return z;
    double c = radius_ / n;
    for (std::size_t i = 0; i < z.size(); ++i) r[i] = c * z[i];
  }
  return r;
}

Vec FeasibleSet::project_scaled(double c, const Vec& z) const {
  if (!(c > 0.0 && c <= 1.0))
    throw std::invalid_argument("FeasibleSet::project_scaled: c must be in (0,1]");
  Vec inner(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) inner[i] = z[i] / c;
  Vec p = project(inner);
  for (double& v : p) v *= c;
  return p;
}

bool FeasibleSet::contains(const Vec& z, double slack) const {
  if (static_cast<int>(z.size()) != dim_) return false;
  if (kind_ == SetKind::Box) {
    for (std::size_t i = 0; i < z.size(); ++i)
      if (z[i] < lo_[i] - slack || z[i] > hi_[i] + slack) return false;
    return true;
  }
  return norm(z) <= radius_ + slack;
}

}  // namespace dbco
