#include "symmp/angle.hpp"

#include <cmath>

namespace symmp {

Angle Angle::from_radians(double radians) {
  double reduced = std::remainder(radians, kTwoPi);
  double ticks = std::ldexp(reduced, kFractionBits) / kTwoPi;
  return from_ticks(std::llround(ticks));
}

double Angle::radians() const noexcept { return ticks_to_radians(ticks_); }

double ticks_to_radians(std::int64_t ticks) noexcept {
  return std::ldexp(static_cast<double>(ticks) * kTwoPi, -Angle::kFractionBits);
}

double normalize_angle(double radians) { return Angle::from_radians(radians).radians(); }

}  // namespace symmp
