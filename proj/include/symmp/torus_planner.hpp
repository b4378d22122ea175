#pragma once

#include <string_view>

#include "symmp/orbit.hpp"
#include "symmp/path.hpp"
#include "symmp/tolerance.hpp"
#include "symmp/torus.hpp"

namespace symmp {

using TorusPath = Path<TorusSpace>;
using KleinPoint = OrbitPoint<TorusSpace>;

/// Effectual domains of the four-domain planner on T x K. D31 and D32 together form D3.
enum class TorusDomain { D1, D2, D31, D32, D4 };

/// Which piece of A_x carries the chosen lift (D2 and D32 only).
enum class TorusCase { none, on_cx, on_cxd };

struct TorusLabel {
  TorusDomain domain;
  TorusCase where = TorusCase::none;

  friend constexpr bool operator==(const TorusLabel&, const TorusLabel&) = default;
};

/// "D1" .. "D4": D31 and D32 both report as "D3".
std::string_view external_name(TorusDomain d) noexcept;
/// "D1", "D2", "D31", "D32", "D4".
std::string_view internal_name(TorusDomain d) noexcept;
std::string_view case_name(TorusCase c) noexcept;

struct TorusQuery {
  TorusPoint x;
  KleinPoint z;
};

struct TorusClassification {
  TorusLabel label;
  /// Lift of z in the defining locus of the label (b_x for D31 and D4).
  TorusPoint lift;
};

/// Loci attached to a base point x = (e^{ia}, e^{ib}).
namespace torus_loci {

/// (i x1, -conj(x2)), on the right boundary circle C_x^D.
TorusPoint a_x(const TorusPoint& x) noexcept;
/// (-i x1, -x2) = sigma(a_x), on the left boundary circle C_x^I.
TorusPoint b_x(const TorusPoint& x) noexcept;
/// (x1, -x2).
TorusPoint x_prime(const TorusPoint& x) noexcept;
/// Signed first-coordinate offset of y from x, in (-pi, pi].
double theta(const TorusPoint& x, const TorusPoint& y) noexcept;
/// Angular distance of y2 from -x2.
double offset_from_cx(const TorusPoint& x, const TorusPoint& y) noexcept;
/// x lies on one of the invariant circles S^1 x {-1} or S^1 x {1}.
bool on_invariant_circles(const TorusPoint& x, double tol) noexcept;

}  // namespace torus_loci

/// Assigns the query to exactly one domain, testing D1, then z = [a_x], then A_x.
TorusClassification classify(const TorusQuery& q, const Tolerances& tol = kDefaultTolerances);

/// Continuous section of the domain's restriction: a path from x to a lift of z.
TorusPath section(const TorusQuery& q, const Tolerances& tol = kDefaultTolerances);
TorusPath section(const TorusQuery& q, const TorusClassification& c);

struct TorusPlanReport {
  TorusClassification classification;
  TorusPath path;
  double start_error;
  double endpoint_error;
  bool start_ok;
  bool endpoint_ok;
};

TorusPlanReport plan(const TorusQuery& q, const Tolerances& tol = kDefaultTolerances);

/// Number of top-level domains used by the planner.
constexpr int torus_domain_count() noexcept { return 4; }

/// Membership predicates written directly from the domain definitions, with no
/// shared branching with classify(). Used to cross-check the classifier.
namespace torus_predicates {

bool in_m_minus_a(const TorusPoint& x, const TorusPoint& y, double tol) noexcept;
/// y in A_x \ (C_x^I u {a_x}).
bool in_a_minus_ci(const TorusPoint& x, const TorusPoint& y, double tol) noexcept;
bool in_domain(TorusDomain d, const TorusQuery& q, double tol) noexcept;
/// Number of the five domain predicates satisfied by q.
int membership_count(const TorusQuery& q, double tol) noexcept;

}  // namespace torus_predicates

}  // namespace symmp
