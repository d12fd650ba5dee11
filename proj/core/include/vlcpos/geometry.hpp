// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "vlcpos/units.hpp"

namespace vlcpos {

/// Room-frame coordinate in meters; origin at a floor corner, z up.
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  bool operator==(const Point3&) const = default;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point2&) const = default;
};

struct RoomSpec {
  double width = 5.0;
  double length = 5.0;
  double height = 3.0;

  bool operator==(const RoomSpec&) const = default;

  bool contains(const Point3& p) const noexcept;
  bool on_floor(const Point3& p) const noexcept;
};

bool is_finite(const Point3& p) noexcept;

/// Derived quantities of a straight LED -> PD link. Both angle conventions are
/// carried: `elevation_angle` is measured from the floor plane (90 deg directly
/// below the LED), `normal_angle` from the PD surface normal (0 deg directly
/// below). The channel reads `normal_angle`; the CSA estimator reads
/// `elevation_angle`.
struct LinkGeometry {
  double slant_distance = 0.0;
  double vertical_separation = 0.0;
  double horizontal_distance = 0.0;
  Degrees elevation_angle;
  Degrees normal_angle;
};

double euclidean_distance(const Point3& a, const Point3& b) noexcept;

/// Throws Error{LedNotAbovePd} unless led.z > pd.z.
LinkGeometry link_geometry(const Point3& led, const Point3& pd);

/// `count` evenly spaced floor points from `start` to `end`, both inclusive.
/// Throws DomainError for count < 2 or off-floor endpoints, OutOfRoom if any
/// point leaves the floor rectangle.
std::vector<Point3> diagonal_positions(const RoomSpec& room, std::size_t count,
                                       const Point3& start, const Point3& end);

}  // namespace vlcpos
