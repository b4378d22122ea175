#include "symmp/torus_planner.hpp"

#include <cmath>
#include <vector>

namespace symmp {

std::string_view external_name(TorusDomain d) noexcept {
  switch (d) {
    case TorusDomain::D1: return "D1";
    case TorusDomain::D2: return "D2";
    case TorusDomain::D31:
    case TorusDomain::D32: return "D3";
    case TorusDomain::D4: return "D4";
  }
  return "?";
}

std::string_view internal_name(TorusDomain d) noexcept {
  switch (d) {
    case TorusDomain::D1: return "D1";
    case TorusDomain::D2: return "D2";
    case TorusDomain::D31: return "D31";
    case TorusDomain::D32: return "D32";
    case TorusDomain::D4: return "D4";
  }
  return "?";
}

std::string_view case_name(TorusCase c) noexcept {
  switch (c) {
    case TorusCase::none: return "none";
    case TorusCase::on_cx: return "OnCx";
    case TorusCase::on_cxd: return "OnCxD";
  }
  return "?";
}

namespace torus_loci {

TorusPoint a_x(const TorusPoint& x) noexcept { return {x.a + Angle::quarter_turn(), Angle::half_turn() - x.b}; }

TorusPoint b_x(const TorusPoint& x) noexcept { return {x.a - Angle::quarter_turn(), x.b + Angle::half_turn()}; }

TorusPoint x_prime(const TorusPoint& x) noexcept { return {x.a, x.b + Angle::half_turn()}; }

double theta(const TorusPoint& x, const TorusPoint& y) noexcept { return (y.a - x.a).radians(); }

double offset_from_cx(const TorusPoint& x, const TorusPoint& y) noexcept {
  return std::abs((y.b - (x.b + Angle::half_turn())).radians());
}

bool on_invariant_circles(const TorusPoint& x, double tol) noexcept {
  return std::abs(x.b.radians()) <= tol || std::abs((x.b - Angle::half_turn()).radians()) <= tol;
}

}  // namespace torus_loci

TorusClassification classify(const TorusQuery& q, const Tolerances& tol) {
  using namespace torus_loci;
  const TorusPoint& x = q.x;
  const double eps = tol.membership;

  // Of the two lifts exactly one has |theta| <= pi/2, except on the boundary
  // circles where one sits on C_x^I and the other on C_x^D.
  TorusPoint y = q.z.representative();
  if ((y.a - x.a).magnitude() > Angle::kQuarterTurn) y = sigma(y);
  double th = theta(x, y);
  bool boundary = std::abs(th) >= kPi / 2 - eps;
  if (boundary && th < 0) y = sigma(y);

  if (!boundary && offset_from_cx(x, y) > eps) return {{TorusDomain::D1}, y};

  bool on_ab = on_invariant_circles(x, eps);
  if (orbit_distance<TorusSpace>(a_x(x), q.z) <= eps) {
    return {{on_ab ? TorusDomain::D4 : TorusDomain::D31}, b_x(x)};
  }
  TorusDomain d = on_ab ? TorusDomain::D32 : TorusDomain::D2;
  return {{d, boundary ? TorusCase::on_cxd : TorusCase::on_cx}, y};
}

namespace {

/// Right-nested chain of coordinate rotations starting at a point.
class RotationChain {
 public:
  explicit RotationChain(TorusPoint start) : at_(start) {}

  RotationChain& rotate(int coord, double delta) {
    pieces_.push_back(TorusPath::segment(TorusRotate(coord, delta, at_)));
    at_ = pieces_.back().end();
    return *this;
  }

  RotationChain& hold() {
    pieces_.push_back(TorusPath::constant(at_));
    return *this;
  }

  TorusPath build() const {
    TorusPath acc = pieces_.back();
    for (auto it = pieces_.rbegin() + 1; it != pieces_.rend(); ++it) acc = concat(*it, acc);
    return acc;
  }

 private:
  TorusPoint at_;
  std::vector<TorusPath> pieces_;
};

/// Second-coordinate correction along C_x^D for D2, with the branch cut placed at a_x.
double cxd_correction(const TorusPoint& x, const TorusPoint& y) {
  double psi = (y.b - (x.b + Angle::half_turn())).radians();
  double psi_a = (-x.b - x.b).radians();
  if (psi_a <= 0) psi_a += kTwoPi;
  if (psi >= psi_a) psi -= kTwoPi;
  if (psi <= psi_a - kTwoPi) psi += kTwoPi;
  return psi;
}

}  // namespace

TorusPath section(const TorusQuery& q, const TorusClassification& c) {
  using namespace torus_loci;
  const TorusPoint& x = q.x;
  const TorusPoint& y = c.lift;
  RotationChain chain(x);
  switch (c.label.domain) {
    case TorusDomain::D1:
      chain.rotate(1, theta(x, y)).rotate(2, (y.b - x.b).radians());
      break;
    case TorusDomain::D2:
      // Both cases share the three-stage shape so the section stays continuous
      // where C_x meets C_x^D.
      chain.rotate(2, kPi);
      if (c.label.where == TorusCase::on_cx) {
        chain.rotate(1, theta(x, y)).hold();
      } else {
        chain.rotate(1, kPi / 2).rotate(2, cxd_correction(x, y));
      }
      break;
    case TorusDomain::D32:
      if (c.label.where == TorusCase::on_cx) {
        chain.rotate(2, kPi).rotate(1, theta(x, y));
      } else {
        chain.rotate(1, kPi / 2).rotate(2, (y.b - x.b).radians());
      }
      break;
    case TorusDomain::D31:
    case TorusDomain::D4:
      chain.rotate(2, kPi).rotate(1, -kPi / 2);
      break;
  }
  return chain.build();
}

TorusPath section(const TorusQuery& q, const Tolerances& tol) { return section(q, classify(q, tol)); }

TorusPlanReport plan(const TorusQuery& q, const Tolerances& tol) {
  TorusClassification c = classify(q, tol);
  TorusPath path = section(q, c);
  double start_error = torus_distance(path.eval(0.0), q.x);
  double endpoint_error = orbit_distance<TorusSpace>(path.eval(1.0), q.z);
  return {c, path, start_error, endpoint_error, start_error <= tol.arithmetic, endpoint_error <= tol.membership};
}

}  // namespace symmp
