// SPDX-License-Identifier: Apache-2.0
#include "vlcpos/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "vlcpos/error.hpp"

namespace vlcpos {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorKind::ValidationError, what);
}

void require_angle_in(Degrees a, double lo, double hi, bool lo_open,
                      bool hi_open, const char* name) {
  const double v = a.value();
  const bool ok = std::isfinite(v) && (lo_open ? v > lo : v >= lo) &&
                  (hi_open ? v < hi : v <= hi);
  if (!ok) {
    throw Error(ErrorKind::DomainError,
                std::string(name) + " " + std::to_string(v) +
                    " deg outside " + (lo_open ? "(" : "[") +
                    std::to_string(lo) + ", " + std::to_string(hi) +
                    (hi_open ? ")" : "]"));
  }
}

// cos of an angle known to lie in [0, 90] deg; clamps the ~1e-17 residue
// that cos(pi/2) leaves behind so that 90 deg maps to exactly zero.
double cos_quadrant(Degrees a) {
  if (a.value() == 90.0) return 0.0;
  return std::cos(a.radians());
}

}  // namespace

double LedSpec::lambertian_order() const {
  if (lambertian_order_override) return *lambertian_order_override;
  return vlcpos::lambertian_order(half_power_angle);
}

void validate(const LedSpec& led) {
  if (!is_finite(led.position)) invalid("led.position must be finite");
  if (!(led.transmit_power > 0.0) || !std::isfinite(led.transmit_power))
    invalid("led.transmit_power must be > 0");
  const double hpa = led.half_power_angle.value();
  if (!(hpa > 0.0 && hpa < 90.0))
    invalid("led.half_power_angle must lie in (0, 90) deg");
  if (led.lambertian_order_override &&
      !(*led.lambertian_order_override > 0.0 &&
        std::isfinite(*led.lambertian_order_override)))
    invalid("led.lambertian_order must be > 0");
}

void validate(const PdSpec& pd) {
  if (!is_finite(pd.position)) invalid("pd.position must be finite");
  if (!(pd.area > 0.0) || !std::isfinite(pd.area))
    invalid("pd.area must be > 0");
  const double fov = pd.fov.value();
  if (!(fov > 0.0 && fov <= 90.0)) invalid("pd.fov must lie in (0, 90] deg");
  if (!(pd.filter_gain > 0.0) || !std::isfinite(pd.filter_gain))
    invalid("pd.filter_gain must be > 0");
  if (!(pd.refractive_index >= 1.0) || !std::isfinite(pd.refractive_index))
    invalid("pd.refractive_index must be >= 1");
}

double lambertian_order(Degrees half_power_angle) {
  require_angle_in(half_power_angle, 0.0, 90.0, true, true,
                   "half-power angle");
  return -std::numbers::ln2 / std::log(std::cos(half_power_angle.radians()));
}

double radiant_intensity(Degrees irradiance_angle, double m) {
  require_angle_in(irradiance_angle, 0.0, 90.0, false, false,
                   "irradiance angle");
  if (!(m > 0.0)) {
    throw Error(ErrorKind::DomainError,
                "Lambertian order must be > 0, got " + std::to_string(m));
  }
  return (m + 1.0) / (2.0 * std::numbers::pi) *
         std::pow(cos_quadrant(irradiance_angle), m);
}

double concentrator_gain(Degrees normal_angle, double refractive_index,
                         Degrees fov) {
  if (!(fov.value() > 0.0)) {
    throw Error(ErrorKind::DomainError,
                "field of view must be > 0 deg, got " +
                    std::to_string(fov.value()));
  }
  if (normal_angle.value() < 0.0) {
    throw Error(ErrorKind::DomainError, "incidence angle must be >= 0 deg");
  }
  if (normal_angle > fov) return 0.0;
  const double s = std::sin(fov.radians());
  return refractive_index * refractive_index / (s * s);
}

double effective_area(Degrees normal_angle, const PdSpec& pd) {
  const double g = concentrator_gain(normal_angle, pd.refractive_index, pd.fov);
  if (g == 0.0) return 0.0;
  return pd.area * pd.filter_gain * g * cos_quadrant(normal_angle);
}

double received_power_at(double transmit_power, double m, const PdSpec& pd,
                         double slant_distance, Degrees irradiance_angle,
                         Degrees incidence_angle) {
  if (!(slant_distance > 0.0)) {
    throw Error(ErrorKind::DomainError, "slant distance must be > 0");
  }
  const double a_eff = effective_area(incidence_angle, pd);
  if (a_eff == 0.0) return 0.0;
  return transmit_power / (slant_distance * slant_distance) *
         radiant_intensity(irradiance_angle, m) * a_eff;
}

ChannelSample received_power(const LedSpec& led, const PdSpec& pd,
                             const NoiseHook& noise) {
  ChannelSample s;
  s.geometry = link_geometry(led.position, pd.position);
  const double m = led.lambertian_order();
  const Degrees angle = s.geometry.normal_angle;
  s.radiant_intensity = radiant_intensity(angle, m);
  s.concentrator_gain =
      concentrator_gain(angle, pd.refractive_index, pd.fov);
  s.effective_area = effective_area(angle, pd);
  const double d = s.geometry.slant_distance;
  s.received_power =
      led.transmit_power / (d * d) * s.radiant_intensity * s.effective_area;
  if (noise) s.received_power = noise(s.received_power);
  return s;
}

}  // namespace vlcpos
