#pragma once

#include <array>
#include <span>
#include <vector>

#include "symmp/sphere.hpp"

namespace symmp {

using Octonion = std::array<double, 8>;
using Quaternion = std::array<double, 4>;

/// Hamilton product, components ordered (w, x, y, z).
Quaternion quaternion_multiply(const Quaternion& p, const Quaternion& q) noexcept;

/// Octonion product from the Fano-plane table with oriented lines
/// 123, 145, 176, 246, 257, 347, 365 (e1e2 = e3, e1e4 = e5, e2e4 = e6, e3e4 = e7).
Octonion octonion_multiply(const Octonion& p, const Octonion& q) noexcept;

/// Basis product e_a e_b = sign * e_index for a, b in 0..7.
struct BasisProduct {
  int sign;
  int index;
};
BasisProduct octonion_basis_product(int a, int b) noexcept;

enum class FrameKind { canonical, complex, quaternion, octonion };

/// Continuous spanning family v_0(p) = p, v_1(p), ..., v_k(p) on S^n.
///
/// For n in {1, 3, 7} the family is the global orthonormal frame given by
/// right multiplication with the imaginary units, so k = n. Otherwise the
/// remaining vectors are the canonical basis e_1 .. e_{n+1} and k = n + 1.
class Frame {
 public:
  /// Throws InvalidDimension for n < 1.
  static Frame make(int n);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  FrameKind kind() const noexcept { return kind_; }

  /// v_i(p) for 0 <= i <= k.
  SpherePoint vector(const SpherePoint& p, int i) const;
  std::vector<SpherePoint> vectors(const SpherePoint& p) const;

 private:
  Frame(int n, int k, FrameKind kind) : n_(n), k_(k), kind_(kind) {}
  int n_;
  int k_;
  FrameKind kind_;
};

/// Number of domains of the sphere planner, k + 1.
inline int domain_count(const Frame& f) noexcept { return f.k() + 1; }

}  // namespace symmp
