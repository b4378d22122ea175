#include "symmp/torus.hpp"

#include <cmath>
#include <stdexcept>

namespace symmp {

double torus_distance(const TorusPoint& p, const TorusPoint& q) noexcept {
  return std::hypot((p.a - q.a).radians(), (p.b - q.b).radians());
}

TorusRotate::TorusRotate(int coord, double delta, TorusPoint start)
    : coord_(coord), delta_(delta), start_(start), end_(start) {
  if (coord != 1 && coord != 2) throw std::invalid_argument("torus rotation coordinate must be 1 or 2");
  end_ = eval(1.0);
}

TorusPoint TorusRotate::eval(double t) const {
  TorusPoint p = start_;
  Angle step = Angle::from_radians(t * delta_);
  if (coord_ == 1) {
    p.a = p.a + step;
  } else {
    p.b = p.b + step;
  }
  return p;
}

}  // namespace symmp
