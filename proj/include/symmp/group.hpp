#pragma once

#include <array>
#include <string_view>

namespace symmp {

/// Element of the cyclic group of order two acting on the free Z2-spaces.
class Z2 {
 public:
  constexpr Z2() noexcept = default;

  static constexpr Z2 identity() noexcept { return Z2(false); }
  static constexpr Z2 sigma() noexcept { return Z2(true); }
  static constexpr std::array<Z2, 2> elements() noexcept { return {identity(), sigma()}; }

  constexpr bool is_identity() const noexcept { return !flip_; }
  constexpr Z2 inverse() const noexcept { return *this; }

  constexpr std::string_view name() const noexcept { return flip_ ? "sigma" : "identity"; }

  friend constexpr Z2 operator*(Z2 lhs, Z2 rhs) noexcept { return Z2(lhs.flip_ != rhs.flip_); }
  friend constexpr bool operator==(Z2, Z2) noexcept = default;

 private:
  constexpr explicit Z2(bool flip) noexcept : flip_(flip) {}
  bool flip_ = false;
};

}  // namespace symmp
