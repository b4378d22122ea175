#pragma once

#include "symmp/frame.hpp"
#include "symmp/orbit.hpp"
#include "symmp/path.hpp"
#include "symmp/sphere.hpp"
#include "symmp/tolerance.hpp"

namespace symmp {

using SpherePath = Path<SphereSpace>;
using ProjectivePoint = OrbitPoint<SphereSpace>;

struct SphereQuery {
  SpherePoint p;
  ProjectivePoint l;
};

struct SphereClassification {
  /// Smallest i with |<q, v_i(p)>| > tol for the lifts q of l.
  int index;
  /// The lift with <lift, v_index(p)> > tol.
  SpherePoint lift;
};

/// First-hit classification. Throws NumericallyDegenerate if every frame
/// inner product is within tolerance of zero.
SphereClassification classify_sphere(const Frame& f, const SphereQuery& q, const Tolerances& tol = kDefaultTolerances);

/// Shortest constant-speed geodesic from p to the classified lift, or the
/// constant path when the two are closer than 1e-9.
SpherePath section_sphere(const Frame& f, const SphereQuery& q, const Tolerances& tol = kDefaultTolerances);
SpherePath section_sphere(const SphereQuery& q, const SphereClassification& c);

struct SpherePlanReport {
  SphereClassification classification;
  SpherePath path;
  double omega;
  double start_error;
  double endpoint_error;
  bool start_ok;
  bool endpoint_ok;
};

SpherePlanReport plan_sphere(const Frame& f, const SphereQuery& q, const Tolerances& tol = kDefaultTolerances);

}  // namespace symmp
