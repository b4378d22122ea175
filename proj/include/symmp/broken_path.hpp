#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "symmp/errors.hpp"
#include "symmp/group.hpp"
#include "symmp/orbit.hpp"
#include "symmp/path.hpp"

namespace symmp {

inline constexpr double kGluingTolerance = 1e-9;

/// Element of P_k^G(X): paths alpha_1..alpha_k joined by jumps g_1..g_{k-1}
/// with alpha_i(1) * g_i = alpha_{i+1}(0).
template <class Space>
class BrokenPath {
 public:
  using P = Path<Space>;
  using Point = typename Space::Point;

  /// Validates lengths and gluing; throws GluingViolation naming the first bad jump (1-based).
  BrokenPath(std::vector<P> paths, std::vector<Z2> jumps) : paths_(std::move(paths)), jumps_(std::move(jumps)) {
    if (paths_.empty()) throw TooShort("a broken path needs at least one stage");
    if (jumps_.size() + 1 != paths_.size()) throw std::invalid_argument("k paths need k-1 jumps");
    for (std::size_t i = 0; i + 1 < paths_.size(); ++i) {
      double gap = Space::distance(Space::act(jumps_[i], paths_[i].end()), paths_[i + 1].start());
      if (!(gap <= kGluingTolerance)) throw GluingViolation(i + 1, gap);
    }
  }

  explicit BrokenPath(P path) : BrokenPath(std::vector<P>{std::move(path)}, {}) {}

  std::size_t stages() const noexcept { return paths_.size(); }
  const std::vector<P>& paths() const noexcept { return paths_; }
  const std::vector<Z2>& jumps() const noexcept { return jumps_; }

 private:
  std::vector<P> paths_;
  std::vector<Z2> jumps_;
};

/// Element of P^{G,k}(X): consecutive paths glue only up to orbits.
template <class Space>
class OrdinaryBrokenPath {
 public:
  using P = Path<Space>;

  explicit OrdinaryBrokenPath(std::vector<P> paths) : paths_(std::move(paths)) {
    if (paths_.empty()) throw TooShort("a broken path needs at least one stage");
    for (std::size_t i = 0; i + 1 < paths_.size(); ++i) {
      double gap = orbit_distance<Space>(paths_[i].end(), project<Space>(paths_[i + 1].start()));
      if (!(gap <= kGluingTolerance)) throw GluingViolation(i + 1, gap);
    }
  }

  std::size_t stages() const noexcept { return paths_.size(); }
  const std::vector<P>& paths() const noexcept { return paths_; }

 private:
  std::vector<P> paths_;
};

template <class Space>
BrokenPath<Space> make_broken(std::vector<Path<Space>> paths, std::vector<Z2> jumps) {
  return BrokenPath<Space>(std::move(paths), std::move(jumps));
}

/// e_k: (alpha_1(0), alpha_k(1)).
template <class Space>
std::pair<typename Space::Point, typename Space::Point> eval_ek(const BrokenPath<Space>& bp) {
  return {bp.paths().front().start(), bp.paths().back().end()};
}

/// epsilon_k on P^{G,k}(X): (alpha_1(0), alpha_k(1)).
template <class Space>
std::pair<typename Space::Point, typename Space::Point> eval_ek(const OrdinaryBrokenPath<Space>& bp) {
  return {bp.paths().front().start(), bp.paths().back().end()};
}

/// iota: appends the identity jump and the stationary path at alpha_k(1).
template <class Space>
BrokenPath<Space> iota(const BrokenPath<Space>& bp) {
  auto paths = bp.paths();
  auto jumps = bp.jumps();
  jumps.push_back(Z2::identity());
  paths.push_back(Path<Space>::constant(bp.paths().back().end()));
  return BrokenPath<Space>(std::move(paths), std::move(jumps));
}

/// r: drops the last jump and path. Throws TooShort on a single stage.
template <class Space>
BrokenPath<Space> retract(const BrokenPath<Space>& bp) {
  if (bp.stages() < 2) throw TooShort("retract needs at least two stages");
  auto paths = bp.paths();
  auto jumps = bp.jumps();
  paths.pop_back();
  jumps.pop_back();
  return BrokenPath<Space>(std::move(paths), std::move(jumps));
}

/// f_k: P_{k+1} -> P_k for k >= 2, merging the last two stages into
/// (alpha_k g_k) * alpha_{k+1} and the last two jumps into g_{k-1} g_k.
/// Throws TooShort for inputs with fewer than three stages.
template <class Space>
BrokenPath<Space> stabilize_f(const BrokenPath<Space>& bp) {
  if (bp.stages() < 3) throw TooShort("stabilization needs at least three stages");
  auto paths = bp.paths();
  auto jumps = bp.jumps();
  Z2 gk = jumps.back();
  jumps.pop_back();
  jumps.back() = jumps.back() * gk;
  Path<Space> last = paths.back();
  paths.pop_back();
  paths.back() = concat(act_path(gk, paths.back()), last, kGluingTolerance);
  return BrokenPath<Space>(std::move(paths), std::move(jumps));
}

/// Twisted evaluation (alpha(0), alpha(1) * g).
template <class Space>
std::pair<typename Space::Point, typename Space::Point> twisted_eval(const Path<Space>& alpha, Z2 g) {
  return {alpha.start(), Space::act(g, alpha.end())};
}

/// phi: P_2^G(X) -> PX x G, (alpha_1, g, alpha_2) -> (alpha_1 * (alpha_2 g^{-1}), g).
template <class Space>
std::pair<Path<Space>, Z2> phi(const BrokenPath<Space>& bp) {
  if (bp.stages() < 2) throw TooShort("phi needs exactly two stages");
  if (bp.stages() > 2) throw TooLong("phi needs exactly two stages");
  Z2 g = bp.jumps().front();
  return {concat(bp.paths()[0], act_path(g.inverse(), bp.paths()[1]), kGluingTolerance), g};
}

/// phi^{-1}(alpha, g) = (alpha', g, alpha'' g) with alpha', alpha'' the two halves of alpha.
template <class Space>
BrokenPath<Space> phi_inv(const Path<Space>& alpha, Z2 g) {
  auto [first, second] = split_half(alpha);
  return BrokenPath<Space>({first, act_path(g, second)}, {g});
}

/// Delta_G(x, g) = (x, x g).
template <class Space>
std::pair<typename Space::Point, typename Space::Point> saturated_diagonal(const typename Space::Point& x, Z2 g) {
  return {x, Space::act(g, x)};
}

/// The unique g with x * g = y. Throws NotInOrbit.
template <class Space>
Z2 translation_tau(const typename Space::Point& x, const typename Space::Point& y, double tol = kGluingTolerance) {
  for (Z2 g : Z2::elements()) {
    if (Space::distance(Space::act(g, x), y) <= tol) return g;
  }
  throw NotInOrbit();
}

/// P: forgets the group coordinates.
template <class Space>
OrdinaryBrokenPath<Space> forget_jumps(const BrokenPath<Space>& bp) {
  return OrdinaryBrokenPath<Space>(bp.paths());
}

/// q(alpha, g, beta) = alpha * (beta g^{-1}).
template <class Space>
Path<Space> q_map(const BrokenPath<Space>& bp) {
  if (bp.stages() < 2) throw TooShort("q needs exactly two stages");
  if (bp.stages() > 2) throw TooLong("q needs exactly two stages");
  return concat(bp.paths()[0], act_path(bp.jumps().front().inverse(), bp.paths()[1]), kGluingTolerance);
}

/// Effectual evaluation gamma -> (gamma(0), [gamma(1)]).
template <class Space>
std::pair<typename Space::Point, OrbitPoint<Space>> effectual_eval(const Path<Space>& gamma) {
  return {gamma.start(), project<Space>(gamma.end())};
}

/// P pi: the image of a path in the orbit space, evaluated pointwise.
template <class Space>
class ProjectedPath {
 public:
  explicit ProjectedPath(Path<Space> lift) : lift_(std::move(lift)) {}
  OrbitPoint<Space> eval(double t) const { return project<Space>(lift_.eval(t)); }
  /// e_01: both endpoints in the orbit space.
  std::pair<OrbitPoint<Space>, OrbitPoint<Space>> endpoints() const { return {eval(0.0), eval(1.0)}; }

 private:
  Path<Space> lift_;
};

template <class Space>
ProjectedPath<Space> project_path(const Path<Space>& gamma) {
  return ProjectedPath<Space>(gamma);
}

}  // namespace symmp
