#pragma once

#include <cstdint>
#include <numbers>

namespace symmp {

/// A point of the circle group, stored as a fixed-point fraction of a full turn.
///
/// One turn is 2^50 ticks and the stored value lives in (-2^49, 2^49], i.e. the
/// angle in radians lies in (-pi, pi] with +pi representing the half turn.
/// Addition wraps exactly, so the half-turn shift and conjugation used by the
/// torus involution are exact bijections, and conversion to and from radians
/// round-trips bit-for-bit on every representable angle.
class Angle {
 public:
  static constexpr int kFractionBits = 50;
  static constexpr std::int64_t kTurn = std::int64_t{1} << kFractionBits;
  static constexpr std::int64_t kHalfTurn = kTurn / 2;
  static constexpr std::int64_t kQuarterTurn = kTurn / 4;

  constexpr Angle() noexcept = default;

  /// Nearest representable angle to `radians` (any finite real).
  static Angle from_radians(double radians);
  static constexpr Angle from_ticks(std::int64_t ticks) noexcept { return Angle(wrap(ticks)); }

  static constexpr Angle zero() noexcept { return Angle(0); }
  static constexpr Angle half_turn() noexcept { return Angle(kHalfTurn); }
  static constexpr Angle quarter_turn() noexcept { return Angle(kQuarterTurn); }

  constexpr std::int64_t ticks() const noexcept { return ticks_; }
  double radians() const noexcept;

  /// Absolute value of the principal angle, in ticks (0 .. kHalfTurn).
  constexpr std::int64_t magnitude() const noexcept { return ticks_ < 0 ? -ticks_ : ticks_; }

  friend constexpr Angle operator+(Angle a, Angle b) noexcept { return Angle(wrap(a.ticks_ + b.ticks_)); }
  friend constexpr Angle operator-(Angle a, Angle b) noexcept { return Angle(wrap(a.ticks_ - b.ticks_)); }
  constexpr Angle operator-() const noexcept { return Angle(wrap(-ticks_)); }
  friend constexpr bool operator==(Angle, Angle) noexcept = default;
  friend constexpr auto operator<=>(Angle, Angle) noexcept = default;

 private:
  constexpr explicit Angle(std::int64_t ticks) noexcept : ticks_(ticks) {}

  static constexpr std::int64_t wrap(std::int64_t t) noexcept {
    auto u = static_cast<std::int64_t>(static_cast<std::uint64_t>(t) & static_cast<std::uint64_t>(kTurn - 1));
    return u > kHalfTurn ? u - kTurn : u;
  }

  std::int64_t ticks_ = 0;
};

/// Maps any real to its representative in (-pi, pi]. Idempotent bit-for-bit.
double normalize_angle(double radians);

/// Convert a tick count (possibly outside one turn) to radians without wrapping.
double ticks_to_radians(std::int64_t ticks) noexcept;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace symmp
