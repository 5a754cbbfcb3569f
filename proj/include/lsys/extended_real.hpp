#pragma once

#include <compare>
#include <ostream>

namespace lsys {

/// A real number or +infinity. Infinity is an explicit state, never a
/// floating-point overflow.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr explicit ExtendedReal(double value) : value_(value) {}

  static constexpr ExtendedReal infinity() {
    ExtendedReal r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  /// Finite value. Meaningless when is_infinite().
  constexpr double value() const { return value_; }

  friend constexpr ExtendedReal operator+(ExtendedReal lhs, ExtendedReal rhs) {
    if (lhs.infinite_ || rhs.infinite_) return infinity();
    return ExtendedReal(lhs.value_ + rhs.value_);
  }

  friend constexpr bool operator==(ExtendedReal lhs, ExtendedReal rhs) {
    if (lhs.infinite_ || rhs.infinite_) return lhs.infinite_ == rhs.infinite_;
    return lhs.value_ == rhs.value_;
  }

  friend constexpr std::partial_ordering operator<=>(ExtendedReal lhs, ExtendedReal rhs) {
    if (lhs.infinite_ && rhs.infinite_) return std::partial_ordering::equivalent;
    if (lhs.infinite_) return std::partial_ordering::greater;
    if (rhs.infinite_) return std::partial_ordering::less;
    return lhs.value_ <=> rhs.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, ExtendedReal x) {
    if (x.infinite_) return os << "inf";
    return os << x.value_;
  }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

}  // namespace lsys
