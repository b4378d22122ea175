#include "symmp/frame.hpp"

#include "symmp/errors.hpp"

namespace symmp {

namespace {

constexpr int kFano[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};

struct OctonionTable {
  BasisProduct entry[8][8];

  constexpr OctonionTable() : entry{} {
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) {
        if (a == 0) {
          entry[a][b] = {1, b};
        } else if (b == 0) {
          entry[a][b] = {1, a};
        } else if (a == b) {
          entry[a][b] = {-1, 0};
        }
      }
    }
    for (const auto& line : kFano) {
      for (int r = 0; r < 3; ++r) {
        int i = line[r];
        int j = line[(r + 1) % 3];
        int l = line[(r + 2) % 3];
        entry[i][j] = {1, l};
        entry[j][i] = {-1, l};
      }
    }
  }
};

constexpr OctonionTable kTable{};

}  // namespace

Quaternion quaternion_multiply(const Quaternion& p, const Quaternion& q) noexcept {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

BasisProduct octonion_basis_product(int a, int b) noexcept { return kTable.entry[a][b]; }

Octonion octonion_multiply(const Octonion& p, const Octonion& q) noexcept {
  Octonion r{};
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      BasisProduct e = kTable.entry[a][b];
      r[e.index] += e.sign * p[a] * q[b];
    }
  }
  return r;
}

Frame Frame::make(int n) {
  switch (n) {
    case 1: return Frame(1, 1, FrameKind::complex);
    case 3: return Frame(3, 3, FrameKind::quaternion);
    case 7: return Frame(7, 7, FrameKind::octonion);
    default:
      if (n < 1) throw InvalidDimension(n);
      return Frame(n, n + 1, FrameKind::canonical);
  }
}

SpherePoint Frame::vector(const SpherePoint& p, int i) const {
  if (p.dim() != n_) throw DimensionMismatch("point does not lie on the frame's sphere");
  if (i < 0 || i > k_) throw std::out_of_range("frame index out of range");
  if (i == 0) return p;
  switch (kind_) {
    case FrameKind::canonical:
      return SpherePoint::basis(n_, i - 1);
    case FrameKind::complex:
      return SpherePoint({-p[1], p[0]});
    case FrameKind::quaternion: {
      Quaternion u{};
      u[static_cast<std::size_t>(i)] = 1.0;
      Quaternion r = quaternion_multiply({p[0], p[1], p[2], p[3]}, u);
      return SpherePoint(std::vector<double>(r.begin(), r.end()));
    }
    case FrameKind::octonion: {
      Octonion x{};
      for (std::size_t c = 0; c < 8; ++c) x[c] = p[c];
      Octonion u{};
      u[static_cast<std::size_t>(i)] = 1.0;
      Octonion r = octonion_multiply(x, u);
      return SpherePoint(std::vector<double>(r.begin(), r.end()));
    }
  }
  throw std::logic_error("unreachable frame kind");
}

std::vector<SpherePoint> Frame::vectors(const SpherePoint& p) const {
  std::vector<SpherePoint> v;
  v.reserve(static_cast<std::size_t>(k_) + 1);
  for (int i = 0; i <= k_; ++i) v.push_back(vector(p, i));
  return v;
}

}  // namespace symmp
