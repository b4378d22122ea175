#include "symmp/sphere_planner.hpp"

#include <cmath>

#include "symmp/errors.hpp"

namespace symmp {

SphereClassification classify_sphere(const Frame& f, const SphereQuery& q, const Tolerances& tol) {
  const SpherePoint& q0 = q.l.representative();
  if (q0.dim() != f.n() || q.p.dim() != f.n()) throw DimensionMismatch("query does not match the frame dimension");
  for (int i = 0; i <= f.k(); ++i) {
    double s = dot(q0, f.vector(q.p, i));
    if (std::abs(s) > tol.membership) return {i, s > 0 ? q0 : antipode(q0)};
  }
  throw NumericallyDegenerate("all frame inner products vanish within tolerance");
}

SpherePath section_sphere(const SphereQuery& q, const SphereClassification& c) {
  if (sphere_angle(q.p, c.lift) < 1e-9) return SpherePath::constant(q.p);
  return SpherePath::segment(SphereGeodesic(q.p, c.lift));
}

SpherePath section_sphere(const Frame& f, const SphereQuery& q, const Tolerances& tol) {
  return section_sphere(q, classify_sphere(f, q, tol));
}

SpherePlanReport plan_sphere(const Frame& f, const SphereQuery& q, const Tolerances& tol) {
  SphereClassification c = classify_sphere(f, q, tol);
  SpherePath path = section_sphere(q, c);
  double omega = path.kind() == SpherePath::Kind::segment ? path.as_segment().omega() : 0.0;
  double start_error = sphere_distance(path.eval(0.0), q.p);
  double endpoint_error = orbit_distance<SphereSpace>(path.eval(1.0), q.l);
  return {c, path, omega, start_error, endpoint_error, start_error <= tol.arithmetic, endpoint_error <= tol.membership};
}

}  // namespace symmp
