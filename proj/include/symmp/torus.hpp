#pragma once

#include <string_view>

#include "symmp/angle.hpp"
#include "symmp/group.hpp"

namespace symmp {

/// Point (e^{ia}, e^{ib}) of the torus S^1 x S^1.
struct TorusPoint {
  Angle a;
  Angle b;

  static TorusPoint from_radians(double a, double b) { return {Angle::from_radians(a), Angle::from_radians(b)}; }

  friend constexpr bool operator==(const TorusPoint&, const TorusPoint&) noexcept = default;
};

/// Antipodal involution (x1, x2) -> (-x1, conj(x2)).
constexpr TorusPoint sigma(const TorusPoint& x) noexcept { return {x.a + Angle::half_turn(), -x.b}; }

/// Flat geodesic distance.
double torus_distance(const TorusPoint& p, const TorusPoint& q) noexcept;

/// Rotation of one coordinate by `delta` radians, linear in time.
class TorusRotate {
 public:
  /// `coord` is 1 or 2.
  TorusRotate(int coord, double delta, TorusPoint start);

  int coord() const noexcept { return coord_; }
  double delta() const noexcept { return delta_; }
  const TorusPoint& start() const noexcept { return start_; }
  const TorusPoint& end() const noexcept { return end_; }

  TorusPoint eval(double t) const;

  friend bool operator==(const TorusRotate&, const TorusRotate&) = default;

 private:
  int coord_;
  double delta_;
  TorusPoint start_;
  TorusPoint end_;
};

struct TorusSpace {
  using Point = TorusPoint;
  using Segment = TorusRotate;
  static constexpr std::string_view name = "torus";

  static Point act(Z2 g, const Point& p) noexcept { return g.is_identity() ? p : sigma(p); }
  static double distance(const Point& p, const Point& q) noexcept { return torus_distance(p, q); }
  /// Lexicographic order on (a, b); used only to choose canonical orbit representatives.
  static bool less(const Point& p, const Point& q) noexcept {
    return p.a != q.a ? p.a < q.a : p.b < q.b;
  }
};

}  // namespace symmp
