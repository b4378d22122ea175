#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <memory>
#include <stdexcept>
#include <utility>
#include <variant>

#include "symmp/errors.hpp"
#include "symmp/group.hpp"

namespace symmp {

/// Continuous map [0,1] -> X held as an immutable expression tree.
///
/// Leaves are the space's primitive segments (torus rotations, sphere
/// geodesics) or constant paths. Interior nodes are
///   concat   left on [0, 1/2], right on [1/2, 1] (time halved on each side),
///   acted    the pointwise image of a path under a group element,
///   restrict a reparametrized sub-interval [t0, t1] of a path.
/// Nodes are shared, so copying a Path is cheap and identity of subtrees is
/// observable through same_node().
template <class Space>
class Path {
 public:
  using Point = typename Space::Point;
  using Segment = typename Space::Segment;

  enum class Kind { segment, constant, concat, acted, restrict };

  struct ConcatNode;
  struct ActedNode;
  struct RestrictNode;

  static Path segment(Segment s);
  static Path constant(Point p);

  Kind kind() const noexcept { return static_cast<Kind>(node_->body.index()); }
  const Point& start() const noexcept { return node_->start; }
  const Point& end() const noexcept { return node_->end; }

  /// Throws std::domain_error when t is outside [0, 1].
  Point eval(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("path parameter outside [0, 1]");
    return eval_unchecked(t);
  }

  const Segment& as_segment() const { return std::get<0>(node_->body); }
  const Point& as_constant() const { return std::get<1>(node_->body); }
  const ConcatNode& as_concat() const { return std::get<2>(node_->body); }
  const ActedNode& as_acted() const { return std::get<3>(node_->body); }
  const RestrictNode& as_restrict() const { return std::get<4>(node_->body); }

  bool same_node(const Path& other) const noexcept { return node_ == other.node_; }

  // Raw constructors; the free functions below add validation and simplification.
  static Path make_concat(Path left, Path right);
  static Path make_acted(Z2 g, Path inner);
  static Path make_restrict(Path inner, double t0, double t1);

 private:
  struct Node;
  explicit Path(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  Point eval_unchecked(double t) const;

  std::shared_ptr<const Node> node_;
};

template <class Space>
struct Path<Space>::ConcatNode {
  Path left;
  Path right;
};

template <class Space>
struct Path<Space>::ActedNode {
  Z2 g;
  Path inner;
};

template <class Space>
struct Path<Space>::RestrictNode {
  Path inner;
  double t0;
  double t1;
};

template <class Space>
struct Path<Space>::Node {
  std::variant<Segment, Point, ConcatNode, ActedNode, RestrictNode> body;
  Point start;
  Point end;
};

template <class Space>
Path<Space> Path<Space>::segment(Segment s) {
  Point a = s.start();
  Point b = s.end();
  return Path(std::make_shared<const Node>(Node{std::move(s), std::move(a), std::move(b)}));
}

template <class Space>
Path<Space> Path<Space>::constant(Point p) {
  Point a = p;
  Point b = p;
  return Path(std::make_shared<const Node>(Node{std::move(p), std::move(a), std::move(b)}));
}

template <class Space>
Path<Space> Path<Space>::make_concat(Path left, Path right) {
  Point a = left.start();
  Point b = right.end();
  return Path(std::make_shared<const Node>(Node{ConcatNode{std::move(left), std::move(right)}, std::move(a), std::move(b)}));
}

template <class Space>
Path<Space> Path<Space>::make_acted(Z2 g, Path inner) {
  Point a = Space::act(g, inner.start());
  Point b = Space::act(g, inner.end());
  return Path(std::make_shared<const Node>(Node{ActedNode{g, std::move(inner)}, std::move(a), std::move(b)}));
}

template <class Space>
Path<Space> Path<Space>::make_restrict(Path inner, double t0, double t1) {
  if (!(t0 >= 0.0 && t0 <= 1.0 && t1 >= 0.0 && t1 <= 1.0)) throw std::domain_error("restriction outside [0, 1]");
  Point a = inner.eval_unchecked(t0);
  Point b = inner.eval_unchecked(t1);
  return Path(std::make_shared<const Node>(Node{RestrictNode{std::move(inner), t0, t1}, std::move(a), std::move(b)}));
}

template <class Space>
typename Path<Space>::Point Path<Space>::eval_unchecked(double t) const {
  if (t == 0.0) return node_->start;
  if (t == 1.0) return node_->end;
  switch (kind()) {
    case Kind::segment:
      return as_segment().eval(t);
    case Kind::constant:
      return as_constant();
    case Kind::concat: {
      const auto& c = as_concat();
      return t <= 0.5 ? c.left.eval_unchecked(2.0 * t) : c.right.eval_unchecked(2.0 * t - 1.0);
    }
    case Kind::acted: {
      const auto& a = as_acted();
      return Space::act(a.g, a.inner.eval_unchecked(t));
    }
    case Kind::restrict: {
      const auto& r = as_restrict();
      return r.inner.eval_unchecked(r.t0 + t * (r.t1 - r.t0));
    }
  }
  throw std::logic_error("unreachable path kind");
}

/// Path concatenation. Requires a.end() within `tol` of b.start(); the halves
/// produced by split_half() of a single path are reassembled into that path.
template <class Space>
Path<Space> concat(const Path<Space>& a, const Path<Space>& b, double tol = 1e-9) {
  using P = Path<Space>;
  double gap = Space::distance(a.end(), b.start());
  if (!(gap <= tol)) throw EndpointMismatch(gap);
  if (a.kind() == P::Kind::restrict && b.kind() == P::Kind::restrict) {
    const auto& l = a.as_restrict();
    const auto& r = b.as_restrict();
    if (l.inner.same_node(r.inner) && l.t0 == 0.0 && l.t1 == 0.5 && r.t0 == 0.5 && r.t1 == 1.0) return l.inner;
  }
  return P::make_concat(a, b);
}

/// Right-nested concatenation of a non-empty list of pieces.
template <class Space>
Path<Space> concat_all(std::initializer_list<Path<Space>> pieces, double tol = 1e-9) {
  if (pieces.size() == 0) throw std::invalid_argument("concat_all needs at least one path");
  auto it = std::rbegin(pieces);
  Path<Space> acc = *it;
  for (++it; it != std::rend(pieces); ++it) acc = concat(*it, acc, tol);
  return acc;
}

/// The two halves t -> p(t/2) and t -> p((1+t)/2). Inverse of concat on concat nodes.
template <class Space>
std::pair<Path<Space>, Path<Space>> split_half(const Path<Space>& p) {
  using P = Path<Space>;
  switch (p.kind()) {
    case P::Kind::concat:
      return {p.as_concat().left, p.as_concat().right};
    case P::Kind::constant:
      return {p, p};
    default:
      return {P::make_restrict(p, 0.0, 0.5), P::make_restrict(p, 0.5, 1.0)};
  }
}

/// Pointwise action of g on p. Nested actions compose, the identity acts trivially.
template <class Space>
Path<Space> act_path(Z2 g, const Path<Space>& p) {
  using P = Path<Space>;
  if (g.is_identity()) return p;
  switch (p.kind()) {
    case P::Kind::acted:
      return act_path(g * p.as_acted().g, p.as_acted().inner);
    case P::Kind::constant:
      return P::constant(Space::act(g, p.as_constant()));
    default:
      return P::make_acted(g, p);
  }
}

/// The i-th probe time of a nested sequence: 0, 1, 1/2, 1/4, 3/4, 1/8, ...
/// Any prefix is a superset of every shorter prefix.
inline double probe_time(std::uint64_t i) {
  if (i == 0) return 0.0;
  if (i == 1) return 1.0;
  std::uint64_t j = i - 1;
  int bits = std::bit_width(j);
  std::uint64_t reversed = 0;
  for (int b = 0; b < bits; ++b) reversed |= ((j >> b) & 1u) << (bits - 1 - b);
  return std::ldexp(static_cast<double>(reversed), -bits);
}

/// Maximum pointwise distance over the first `samples` probe times. Monotone in `samples`.
template <class Space>
double sup_distance(const Path<Space>& p, const Path<Space>& q, std::size_t samples) {
  double best = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    double t = probe_time(i);
    best = std::max(best, Space::distance(p.eval(t), q.eval(t)));
  }
  return best;
}

/// Bitwise equality of the expression trees.
template <class Space>
bool structurally_equal(const Path<Space>& p, const Path<Space>& q) {
  using P = Path<Space>;
  if (p.same_node(q)) return true;
  if (p.kind() != q.kind()) return false;
  switch (p.kind()) {
    case P::Kind::segment:
      return p.as_segment() == q.as_segment();
    case P::Kind::constant:
      return p.as_constant() == q.as_constant();
    case P::Kind::concat:
      return structurally_equal(p.as_concat().left, q.as_concat().left) &&
             structurally_equal(p.as_concat().right, q.as_concat().right);
    case P::Kind::acted:
      return p.as_acted().g == q.as_acted().g && structurally_equal(p.as_acted().inner, q.as_acted().inner);
    case P::Kind::restrict:
      return std::bit_cast<std::uint64_t>(p.as_restrict().t0) == std::bit_cast<std::uint64_t>(q.as_restrict().t0) &&
             std::bit_cast<std::uint64_t>(p.as_restrict().t1) == std::bit_cast<std::uint64_t>(q.as_restrict().t1) &&
             structurally_equal(p.as_restrict().inner, q.as_restrict().inner);
  }
  return false;
}

}  // namespace symmp
