#pragma once

#include <cmath>
#include <limits>
#include <ostream>

namespace needlecomp {

/// A real number or one of the two infinities.
///
/// Infinite values are tags, never the result of floating overflow, so code
/// that branches on `is_finite()` sees the mathematically intended case.
/// Only the conventions actually used are provided (0 * inf = 0 via
/// `times_nonnegative`).
class ExtendedReal {
 public:
  enum class Kind { finite, plus_infinity, minus_infinity };

  constexpr ExtendedReal() noexcept = default;
  constexpr ExtendedReal(double value) noexcept : value_(value) {}  // NOLINT: implicit by intent

  static constexpr ExtendedReal plus_infinity() noexcept {
    return ExtendedReal(Kind::plus_infinity);
  }
  static constexpr ExtendedReal minus_infinity() noexcept {
    return ExtendedReal(Kind::minus_infinity);
  }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr bool is_finite() const noexcept { return kind_ == Kind::finite; }
  constexpr bool is_plus_infinity() const noexcept { return kind_ == Kind::plus_infinity; }
  constexpr bool is_minus_infinity() const noexcept { return kind_ == Kind::minus_infinity; }

  /// Finite payload. Meaningless for infinite values.
  constexpr double value() const noexcept { return value_; }

  /// IEEE view, mapping the tags to +-inf.
  double to_double() const noexcept {
    switch (kind_) {
      case Kind::plus_infinity:
        return std::numeric_limits<double>::infinity();
      case Kind::minus_infinity:
        return -std::numeric_limits<double>::infinity();
      case Kind::finite:
        break;
    }
    return value_;
  }

  /// Product with a non-negative finite factor under the convention 0 * inf = 0.
  constexpr ExtendedReal times_nonnegative(double factor) const noexcept {
    if (is_finite()) return ExtendedReal(value_ * factor);
    if (factor == 0.0) return ExtendedReal(0.0);
    return *this;
  }

  friend constexpr bool operator==(const ExtendedReal& x, const ExtendedReal& y) noexcept {
    if (x.kind_ != y.kind_) return false;
    return !x.is_finite() || x.value_ == y.value_;
  }

  friend constexpr bool operator<(const ExtendedReal& x, const ExtendedReal& y) noexcept {
    if (x.is_minus_infinity()) return !y.is_minus_infinity();
    if (x.is_plus_infinity()) return false;
    if (y.is_plus_infinity()) return true;
    if (y.is_minus_infinity()) return false;
    return x.value_ < y.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtendedReal& x) {
    if (x.is_plus_infinity()) return os << "+inf";
    if (x.is_minus_infinity()) return os << "-inf";
    return os << x.value_;
  }

 private:
  constexpr explicit ExtendedReal(Kind kind) noexcept : kind_(kind) {}

  Kind kind_ = Kind::finite;
  double value_ = 0.0;
};

}  // namespace needlecomp
