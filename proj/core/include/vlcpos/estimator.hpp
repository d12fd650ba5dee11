// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "vlcpos/channel.hpp"
#include "vlcpos/geometry.hpp"
#include "vlcpos/units.hpp"

namespace vlcpos {

/// Incidence measured as elevation above the floor plane, plus its
/// complementary (90 - incidence) and supplementary (90 + incidence) angles.
struct CsaAngles {
  Degrees incidence;
  Degrees complementary;
  Degrees supplementary;
};

/// Per-axis displacement magnitudes from the LED floor projection. The comp
/// and supp pairs come from the cosine of the complementary angle and the sine
/// of the supplementary angle; the fused values are their means.
struct OffsetEstimate {
  double x_comp = 0.0;
  double y_comp = 0.0;
  double x_supp = 0.0;
  double y_supp = 0.0;
  double x_fused = 0.0;
  double y_fused = 0.0;
  double z_fused = 0.0;
};

struct AnchoredEstimate {
  Point3 position;
  /// Set when the raw anchored point fell outside the room and was clamped.
  bool clipped = false;
};

struct EstimateRecord {
  Point3 actual;
  Point3 estimated;
  OffsetEstimate offsets;
  CsaAngles angles;
  double measured_power = 0.0;
  double inverted_distance = 0.0;
  double horizontal_distance = 0.0;
  double positioning_error = 0.0;
  bool clipped = false;
};

/// Inverts the coplanar received-power law for the slant distance d >= V.
/// Throws NonPositivePower for P <= 0, PowerTooHigh when the implied d < V,
/// and DomainError if the implied link would lie outside the PD's FOV.
double invert_power_to_distance(double measured_power, const LedSpec& led,
                                const PdSpec& pd, double vertical_separation);

/// DomainError outside [0, 90] deg.
CsaAngles csa_angles(Degrees incidence_elevation);

OffsetEstimate offset_estimate(double horizontal_distance,
                               const CsaAngles& angles);

/// LED floor projection displaced by the fused offsets along `azimuth`
/// (0 deg = +x, counter-clockwise). Azimuth must lie in [0, 360).
/// With a room, points outside the floor are clamped and flagged.
AnchoredEstimate anchor_estimate(const OffsetEstimate& offsets,
                                 Point2 led_floor_projection, Degrees azimuth);
AnchoredEstimate anchor_estimate(const OffsetEstimate& offsets,
                                 Point2 led_floor_projection, Degrees azimuth,
                                 const RoomSpec& room);

double positioning_error(const Point3& actual, const Point3& estimated) noexcept;

/// Arithmetic mean; throws EmptyInput on an empty list.
double average_error(std::span<const double> errors);

/// Full single-measurement pipeline: invert power, derive D_hor and the
/// elevation angle, build the CSA estimate, anchor it and score it against
/// `actual`.
EstimateRecord estimate_position(double measured_power, const LedSpec& led,
                                 const PdSpec& pd, const Point3& actual,
                                 Degrees azimuth, const RoomSpec& room);

}  // namespace vlcpos
