#include <cmath>
#include <complex>

#include "symmp/torus_planner.hpp"

namespace symmp::torus_predicates {

namespace {

using C = std::complex<double>;

constexpr C kI{0.0, 1.0};

struct Unit {
  C x1;
  C x2;
};

Unit unit(const TorusPoint& p) { return {std::polar(1.0, p.a.radians()), std::polar(1.0, p.b.radians())}; }

double arg_of(C num, C den) { return std::arg(num / den); }

double distance(const Unit& p, const Unit& q) { return std::hypot(arg_of(p.x1, q.x1), arg_of(p.x2, q.x2)); }

Unit a_of(const Unit& x) { return {kI * x.x1, -std::conj(x.x2)}; }

bool on_ci(const Unit& x, const Unit& y, double tol) { return std::abs(arg_of(y.x1, -kI * x.x1)) <= tol; }
bool on_cd(const Unit& x, const Unit& y, double tol) { return std::abs(arg_of(y.x1, kI * x.x1)) <= tol; }
bool in_m(const Unit& x, const Unit& y, double tol) { return std::abs(arg_of(y.x1, x.x1)) <= kPi / 2 + tol; }
bool on_cx(const Unit& x, const Unit& y, double tol) { return std::abs(y.x2 + x.x2) <= tol && in_m(x, y, tol); }
bool in_a(const Unit& x, const Unit& y, double tol) { return on_ci(x, y, tol) || on_cd(x, y, tol) || on_cx(x, y, tol); }

bool on_ab(const Unit& x, double tol) { return std::abs(x.x2 + 1.0) <= tol || std::abs(x.x2 - 1.0) <= tol; }

template <class Pred>
bool some_lift(const TorusQuery& q, Pred&& pred) {
  auto [y0, y1] = q.z.lifts();
  return pred(unit(y0)) || pred(unit(y1));
}

}  // namespace

bool in_m_minus_a(const TorusPoint& x, const TorusPoint& y, double tol) noexcept {
  Unit ux = unit(x);
  Unit uy = unit(y);
  return in_m(ux, uy, tol) && !in_a(ux, uy, tol);
}

bool in_a_minus_ci(const TorusPoint& x, const TorusPoint& y, double tol) noexcept {
  Unit ux = unit(x);
  Unit uy = unit(y);
  return in_a(ux, uy, tol) && !on_ci(ux, uy, tol) && distance(uy, a_of(ux)) > tol;
}

bool in_domain(TorusDomain d, const TorusQuery& q, double tol) noexcept {
  Unit ux = unit(q.x);
  bool ab = on_ab(ux, tol);
  auto is_ax = [&](const Unit& y) { return distance(y, a_of(ux)) <= tol; };
  auto in_a_ci = [&](const Unit& y) { return in_a(ux, y, tol) && !on_ci(ux, y, tol) && !is_ax(y); };
  switch (d) {
    case TorusDomain::D1:
      return some_lift(q, [&](const Unit& y) { return in_m(ux, y, tol) && !in_a(ux, y, tol); });
    case TorusDomain::D2:
      return !ab && some_lift(q, in_a_ci);
    case TorusDomain::D31:
      return !ab && some_lift(q, is_ax);
    case TorusDomain::D32:
      return ab && some_lift(q, in_a_ci);
    case TorusDomain::D4:
      return ab && some_lift(q, is_ax);
  }
  return false;
}

int membership_count(const TorusQuery& q, double tol) noexcept {
  int n = 0;
  for (TorusDomain d : {TorusDomain::D1, TorusDomain::D2, TorusDomain::D31, TorusDomain::D32, TorusDomain::D4})
    n += in_domain(d, q, tol) ? 1 : 0;
  return n;
}

}  // namespace symmp::torus_predicates
