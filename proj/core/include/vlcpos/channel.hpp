// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>

#include "vlcpos/geometry.hpp"
#include "vlcpos/units.hpp"

namespace vlcpos {

/// Downward-facing Lambertian LED.
struct LedSpec {
  Point3 position{2.5, 2.5, 3.0};
  double transmit_power = 15.0;  // W
  Degrees half_power_angle{60.0};
  /// When unset the order follows from the half-power angle.
  std::optional<double> lambertian_order_override;

  bool operator==(const LedSpec&) const = default;

  double lambertian_order() const;
};

/// Upward-facing photodiode behind an optical filter and a concentrator.
struct PdSpec {
  Point3 position{2.5, 2.5, 0.0};
  double area = 2.25e-6;  // m^2
  Degrees fov{90.0};
  double filter_gain = 1.0;
  double refractive_index = 1.5;

  bool operator==(const PdSpec&) const = default;
};

/// Throws ValidationError naming the first violated invariant.
void validate(const LedSpec& led);
void validate(const PdSpec& pd);

struct ChannelSample {
  LinkGeometry geometry;
  double radiant_intensity = 0.0;  // 1/sr
  double concentrator_gain = 0.0;
  double effective_area = 0.0;  // m^2
  double received_power = 0.0;  // W
};

/// m = -ln 2 / ln cos(half_power_angle); DomainError outside (0, 90) deg.
double lambertian_order(Degrees half_power_angle);

/// ((m + 1) / 2pi) cos^m(angle); DomainError outside [0, 90] deg or m <= 0.
double radiant_intensity(Degrees irradiance_angle, double m);

/// n^2 / sin^2(fov) inside the field of view, 0 outside.
double concentrator_gain(Degrees normal_angle, double refractive_index,
                         Degrees fov);

/// A h g cos(angle) inside the field of view, 0 outside.
double effective_area(Degrees normal_angle, const PdSpec& pd);

/// Optional perturbation applied to the clean received power. Unset means the
/// channel is deterministic.
using NoiseHook = std::function<double(double clean_power)>;

/// Received power of the coplanar link (LED facing down, PD facing up), where
/// the irradiance and incidence angles coincide with the link's normal angle.
/// Throws LedNotAbovePd for degenerate geometry.
ChannelSample received_power(const LedSpec& led, const PdSpec& pd,
                             const NoiseHook& noise = {});

/// Generic entry point with independent irradiance and incidence angles and an
/// explicit slant distance. Used by the fixed-angle figure sweeps.
double received_power_at(double transmit_power, double m, const PdSpec& pd,
                         double slant_distance, Degrees irradiance_angle,
                         Degrees incidence_angle);

}  // namespace vlcpos
