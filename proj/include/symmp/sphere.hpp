#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "symmp/group.hpp"

namespace symmp {

/// Unit vector of R^{n+1}, a point of S^n.
///
/// Construction rescales the input to unit length unless it is already within
/// 1e-14 of unit squared norm, so rebuilding a point from its own coordinates
/// leaves it unchanged.
class SpherePoint {
 public:
  SpherePoint() = default;
  explicit SpherePoint(std::vector<double> coords);
  SpherePoint(std::initializer_list<double> coords) : SpherePoint(std::vector<double>(coords)) {}

  /// Canonical basis vector e_i of R^{n+1}, 0-based.
  static SpherePoint basis(int n, int i);

  int dim() const noexcept { return static_cast<int>(coords_.size()) - 1; }
  std::span<const double> coords() const noexcept { return coords_; }
  double operator[](std::size_t i) const noexcept { return coords_[i]; }

  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;

 private:
  struct Raw {};
  SpherePoint(Raw, std::vector<double> coords) : coords_(std::move(coords)) {}
  friend SpherePoint antipode(const SpherePoint& p);

  std::vector<double> coords_;
};

double dot(std::span<const double> u, std::span<const double> v);
inline double dot(const SpherePoint& p, const SpherePoint& q) { return dot(p.coords(), q.coords()); }

/// Coordinatewise negation; exact.
SpherePoint antipode(const SpherePoint& p);

/// Great-circle distance, computed from the chord length.
double sphere_distance(const SpherePoint& p, const SpherePoint& q);

/// Angle between unit vectors, 2 atan2(|p - q|, |p + q|).
double sphere_angle(const SpherePoint& p, const SpherePoint& q);

/// Constant-speed shortest geodesic between two non-antipodal points.
class SphereGeodesic {
 public:
  /// Rejects endpoints with <from, to> <= -1 + 1e-9.
  SphereGeodesic(SpherePoint from, SpherePoint to);

  const SpherePoint& start() const noexcept { return from_; }
  const SpherePoint& end() const noexcept { return to_; }
  double omega() const noexcept { return omega_; }

  SpherePoint eval(double t) const;

  friend bool operator==(const SphereGeodesic& l, const SphereGeodesic& r) {
    return l.from_ == r.from_ && l.to_ == r.to_;
  }

 private:
  SpherePoint from_;
  SpherePoint to_;
  double omega_;
  double sin_omega_;
};

struct SphereSpace {
  using Point = SpherePoint;
  using Segment = SphereGeodesic;
  static constexpr std::string_view name = "sphere";

  static Point act(Z2 g, const Point& p) { return g.is_identity() ? p : antipode(p); }
  static double distance(const Point& p, const Point& q) { return sphere_distance(p, q); }
  static bool less(const Point& p, const Point& q) noexcept;
};

}  // namespace symmp
