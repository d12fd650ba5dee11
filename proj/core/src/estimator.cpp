// SPDX-License-Identifier: Apache-2.0
#include "vlcpos/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "vlcpos/error.hpp"

namespace vlcpos {

namespace {

// Inverted distances within this relative band of V are snapped to V: the
// measurement is on-axis up to round-off, and D_hor must then be exactly 0.
constexpr double kOnAxisSlack = 1e-12;

struct CosSin {
  double c;
  double s;
};

// cos/sin of an angle in degrees. The angle is reduced to [0, 90) and the
// upper half of that range is evaluated through its complement, so diagonal
// azimuths give |cos| == |sin| bit for bit and multiples of 90 deg give exact
// 0 and +-1.
CosSin cos_sin_degrees(double deg) {
  double r = std::fmod(deg, 360.0);
  if (r < 0.0) r += 360.0;
  const int quadrant = static_cast<int>(r / 90.0) % 4;
  r -= 90.0 * quadrant;
  constexpr double kRad = std::numbers::pi / 180.0;
  double c = 0.0;
  double s = 0.0;
  if (r < 45.0) {
    c = std::cos(r * kRad);
    s = std::sin(r * kRad);
  } else if (r == 45.0) {
    c = s = std::cos(45.0 * kRad);
  } else {
    c = std::sin((90.0 - r) * kRad);
    s = std::cos((90.0 - r) * kRad);
  }
  switch (quadrant) {
    case 0: return {c, s};
    case 1: return {-s, c};
    case 2: return {-c, -s};
    default: return {s, -c};
  }
}

}  // namespace

double invert_power_to_distance(double measured_power, const LedSpec& led,
                                const PdSpec& pd, double vertical_separation) {
  if (!(measured_power > 0.0)) {
    throw Error(ErrorKind::NonPositivePower,
                "measured power must be > 0 W, got " +
                    std::to_string(measured_power));
  }
  if (!(vertical_separation > 0.0)) {
    throw Error(ErrorKind::DomainError, "vertical separation must be > 0 m");
  }
  const double m = led.lambertian_order();
  const double g = concentrator_gain(Degrees(0.0), pd.refractive_index, pd.fov);
  // Coplanar link: P = K V^(m+1) / d^(m+3).
  const double k = led.transmit_power * (m + 1.0) * pd.area * pd.filter_gain *
                   g / (2.0 * std::numbers::pi);
  const double v = vertical_separation;
  // Solve in log space; V^(m+1) overflows for very directive LEDs.
  const double log_d =
      (std::log(k) + (m + 1.0) * std::log(v) - std::log(measured_power)) /
      (m + 3.0);
  double d = std::exp(log_d);
  if (d < v * (1.0 + kOnAxisSlack)) {
    if (d < v * (1.0 - kOnAxisSlack)) {
      throw Error(ErrorKind::PowerTooHigh,
                  "measured power " + std::to_string(measured_power) +
                      " W exceeds the on-axis maximum at V = " +
                      std::to_string(v) + " m");
    }
    d = v;
  }
  const Degrees normal = Degrees::from_radians(std::acos(std::min(1.0, v / d)));
  if (normal > pd.fov) {
    throw Error(ErrorKind::DomainError,
                "implied incidence angle " + std::to_string(normal.value()) +
                    " deg lies outside the field of view");
  }
  return d;
}

CsaAngles csa_angles(Degrees incidence_elevation) {
  const double v = incidence_elevation.value();
  if (!(v >= 0.0 && v <= 90.0)) {
    throw Error(ErrorKind::DomainError,
                "incidence elevation " + std::to_string(v) +
                    " deg outside [0, 90]");
  }
  return CsaAngles{incidence_elevation, Degrees(90.0) - incidence_elevation,
                   Degrees(90.0) + incidence_elevation};
}

OffsetEstimate offset_estimate(double horizontal_distance,
                               const CsaAngles& angles) {
  OffsetEstimate o;
  o.x_comp = horizontal_distance * std::cos(angles.complementary.radians());
  o.y_comp = o.x_comp;
  o.x_supp = horizontal_distance * std::sin(angles.supplementary.radians());
  o.y_supp = o.x_supp;
  o.x_fused = (o.x_comp + o.x_supp) / 2.0;
  o.y_fused = (o.y_comp + o.y_supp) / 2.0;
  o.z_fused = 0.0;
  return o;
}

AnchoredEstimate anchor_estimate(const OffsetEstimate& offsets,
                                 Point2 led_floor_projection, Degrees azimuth) {
  const double a = azimuth.value();
  if (!(a >= 0.0 && a < 360.0)) {
    throw Error(ErrorKind::DomainError,
                "azimuth " + std::to_string(a) + " deg outside [0, 360)");
  }
  const auto [c, s] = cos_sin_degrees(a);
  AnchoredEstimate out;
  out.position = Point3{led_floor_projection.x + offsets.x_fused * c,
                        led_floor_projection.y + offsets.y_fused * s, 0.0};
  return out;
}

AnchoredEstimate anchor_estimate(const OffsetEstimate& offsets,
                                 Point2 led_floor_projection, Degrees azimuth,
                                 const RoomSpec& room) {
  AnchoredEstimate out =
      anchor_estimate(offsets, led_floor_projection, azimuth);
  Point3& p = out.position;
  const Point3 raw = p;
  p.x = std::clamp(p.x, 0.0, room.width);
  p.y = std::clamp(p.y, 0.0, room.length);
  out.clipped = !(raw == p);
  return out;
}

double positioning_error(const Point3& actual,
                         const Point3& estimated) noexcept {
  return euclidean_distance(actual, estimated);
}

double average_error(std::span<const double> errors) {
  if (errors.empty()) {
    throw Error(ErrorKind::EmptyInput, "average of an empty error list");
  }
  return std::accumulate(errors.begin(), errors.end(), 0.0) /
         static_cast<double>(errors.size());
}

EstimateRecord estimate_position(double measured_power, const LedSpec& led,
                                 const PdSpec& pd, const Point3& actual,
                                 Degrees azimuth, const RoomSpec& room) {
  EstimateRecord r;
  r.actual = actual;
  r.measured_power = measured_power;
  const double v = led.position.z - actual.z;
  if (!(v > 0.0)) {
    throw Error(ErrorKind::LedNotAbovePd, "LED is not above the PD plane");
  }
  r.inverted_distance = invert_power_to_distance(measured_power, led, pd, v);
  const double d = r.inverted_distance;
  r.horizontal_distance = std::sqrt(std::max(0.0, d * d - v * v));
  const Degrees elevation =
      Degrees::from_radians(std::asin(std::min(1.0, v / d)));
  r.angles = csa_angles(elevation);
  r.offsets = offset_estimate(r.horizontal_distance, r.angles);
  const AnchoredEstimate anchored = anchor_estimate(
      r.offsets, Point2{led.position.x, led.position.y}, azimuth, room);
  r.estimated = anchored.position;
  r.clipped = anchored.clipped;
  r.positioning_error = positioning_error(r.actual, r.estimated);
  return r;
}

}  // namespace vlcpos
