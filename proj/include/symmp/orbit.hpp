#pragma once

#include <algorithm>
#include <utility>

#include "symmp/group.hpp"

namespace symmp {

/// Orbit {y, sigma(y)} of the free Z2-action; a point of the quotient space.
template <class Space>
class OrbitPoint {
 public:
  using Point = typename Space::Point;

  explicit OrbitPoint(Point representative) : rep_(std::move(representative)) {}

  const Point& representative() const noexcept { return rep_; }

  /// Both lifts; `first` is the stored representative.
  std::pair<Point, Point> lifts() const { return {rep_, Space::act(Z2::sigma(), rep_)}; }

  /// Lexicographically larger lift. Used for hashing and display, never for continuity.
  Point canonical() const {
    Point other = Space::act(Z2::sigma(), rep_);
    return Space::less(rep_, other) ? other : rep_;
  }

 private:
  Point rep_;
};

template <class Space>
OrbitPoint<Space> project(const typename Space::Point& y) {
  return OrbitPoint<Space>(y);
}

/// Distance from y to the nearer lift of z.
template <class Space>
double orbit_distance(const typename Space::Point& y, const OrbitPoint<Space>& z) {
  auto [z0, z1] = z.lifts();
  return std::min(Space::distance(y, z0), Space::distance(y, z1));
}

/// Distance between two orbits in the quotient metric.
template <class Space>
double orbit_distance(const OrbitPoint<Space>& w, const OrbitPoint<Space>& z) {
  return orbit_distance<Space>(w.representative(), z);
}

template <class Space>
bool same_orbit(const OrbitPoint<Space>& w, const OrbitPoint<Space>& z, double tol) {
  return orbit_distance<Space>(w, z) <= tol;
}

}  // namespace symmp
