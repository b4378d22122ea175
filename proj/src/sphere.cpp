#include "symmp/sphere.hpp"

#include <algorithm>
#include <cmath>

#include "symmp/errors.hpp"

namespace symmp {

namespace {

double difference_norm(const SpherePoint& p, const SpherePoint& q, double sign) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    double d = p[i] - sign * q[i];
    s += d * d;
  }
  return std::sqrt(s);
}

void require_same_dim(const SpherePoint& p, const SpherePoint& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("sphere points of different dimension");
}

}  // namespace

SpherePoint::SpherePoint(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw InvalidDimension(static_cast<int>(coords_.size()) - 1);
  double sq = dot(coords_, coords_);
  if (!(sq > 0.0) || !std::isfinite(sq)) throw NumericallyDegenerate("cannot normalize a zero or non-finite vector");
  if (std::abs(sq - 1.0) > 1e-14) {
    double n = std::sqrt(sq);
    for (double& x : coords_) x /= n;
  }
}

SpherePoint SpherePoint::basis(int n, int i) {
  if (n < 1) throw InvalidDimension(n);
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  c.at(static_cast<std::size_t>(i)) = 1.0;
  return SpherePoint(Raw{}, std::move(c));
}

double dot(std::span<const double> u, std::span<const double> v) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

SpherePoint antipode(const SpherePoint& p) {
  std::vector<double> c(p.coords().begin(), p.coords().end());
  for (double& x : c) x = -x;
  return SpherePoint(SpherePoint::Raw{}, std::move(c));
}

double sphere_angle(const SpherePoint& p, const SpherePoint& q) {
  require_same_dim(p, q);
  return 2.0 * std::atan2(difference_norm(p, q, 1.0), difference_norm(p, q, -1.0));
}

double sphere_distance(const SpherePoint& p, const SpherePoint& q) { return sphere_angle(p, q); }

bool SphereSpace::less(const Point& p, const Point& q) noexcept {
  return std::lexicographical_compare(p.coords().begin(), p.coords().end(), q.coords().begin(), q.coords().end());
}

SphereGeodesic::SphereGeodesic(SpherePoint from, SpherePoint to) : from_(std::move(from)), to_(std::move(to)) {
  require_same_dim(from_, to_);
  if (dot(from_, to_) <= -1.0 + 1e-9) throw AntipodalEndpoints();
  omega_ = sphere_angle(from_, to_);
  sin_omega_ = std::sin(omega_);
}

SpherePoint SphereGeodesic::eval(double t) const {
  if (t == 0.0) return from_;
  if (t == 1.0) return to_;
  double w0 = 1.0 - t;
  double w1 = t;
  if (omega_ > 0.0) {
    w0 = std::sin((1.0 - t) * omega_) / sin_omega_;
    w1 = std::sin(t * omega_) / sin_omega_;
  }
  std::vector<double> c(from_.coords().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = w0 * from_[i] + w1 * to_[i];
  return SpherePoint(std::move(c));
}

}  // namespace symmp
