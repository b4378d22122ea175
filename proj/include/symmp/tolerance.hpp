#pragma once

namespace symmp {

/// Thresholds shared by membership predicates and assertions.
struct Tolerances {
  /// Membership predicates and endpoint gluing.
  double membership = 1e-9;
  /// Pure-arithmetic identities.
  double arithmetic = 1e-12;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace symmp
