#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symmp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EndpointMismatch : public Error {
 public:
  explicit EndpointMismatch(double gap)
      : Error("concatenation endpoints differ by " + std::to_string(gap)), gap_(gap) {}
  double gap() const noexcept { return gap_; }

 private:
  double gap_;
};

class AntipodalEndpoints : public Error {
 public:
  AntipodalEndpoints() : Error("geodesic endpoints are antipodal") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidDimension : public Error {
 public:
  explicit InvalidDimension(int n) : Error("invalid sphere dimension " + std::to_string(n)) {}
};

class NumericallyDegenerate : public Error {
 public:
  using Error::Error;
};

/// Raised when consecutive stages of a broken path fail alpha_i(1) * g_i = alpha_{i+1}(0).
/// The index is 1-based and names the jump that failed.
class GluingViolation : public Error {
 public:
  GluingViolation(std::size_t index, double gap)
      : Error("gluing violated at jump " + std::to_string(index) + " (gap " + std::to_string(gap) + ")"),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class TooShort : public Error {
 public:
  using Error::Error;
};

class TooLong : public Error {
 public:
  using Error::Error;
};

class NotInOrbit : public Error {
 public:
  NotInOrbit() : Error("points do not lie in a common orbit") {}
};

class RelationViolated : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace symmp
