// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <numbers>

namespace vlcpos {

/// Plane angle in degrees. Degrees are the unit at every API boundary;
/// radians only appear inside trigonometric evaluation.
class Degrees {
 public:
  constexpr Degrees() = default;
  constexpr explicit Degrees(double value) : value_(value) {}

  constexpr double value() const noexcept { return value_; }
  constexpr double radians() const noexcept {
    return value_ * std::numbers::pi / 180.0;
  }

  static constexpr Degrees from_radians(double rad) noexcept {
    return Degrees(rad * 180.0 / std::numbers::pi);
  }

  constexpr auto operator<=>(const Degrees&) const = default;

  friend constexpr Degrees operator+(Degrees a, Degrees b) noexcept {
    return Degrees(a.value_ + b.value_);
  }
  friend constexpr Degrees operator-(Degrees a, Degrees b) noexcept {
    return Degrees(a.value_ - b.value_);
  }

 private:
  double value_ = 0.0;
};

namespace literals {
constexpr Degrees operator""_deg(long double v) {
  return Degrees(static_cast<double>(v));
}
constexpr Degrees operator""_deg(unsigned long long v) {
  return Degrees(static_cast<double>(v));
}
}  // namespace literals

}  // namespace vlcpos
