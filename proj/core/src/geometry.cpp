// SPDX-License-Identifier: Apache-2.0
#include "vlcpos/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vlcpos/error.hpp"

namespace vlcpos {

namespace {

std::string describe(const Point3& p) {
  return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ", " +
         std::to_string(p.z) + ")";
}

}  // namespace

bool RoomSpec::contains(const Point3& p) const noexcept {
  return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= length &&
         p.z >= 0.0 && p.z <= height;
}

bool RoomSpec::on_floor(const Point3& p) const noexcept {
  return p.z == 0.0 && contains(p);
}

bool is_finite(const Point3& p) noexcept {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

double euclidean_distance(const Point3& a, const Point3& b) noexcept {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

LinkGeometry link_geometry(const Point3& led, const Point3& pd) {
  if (!(led.z > pd.z)) {
    throw Error(ErrorKind::LedNotAbovePd,
                "LED at " + describe(led) + " is not above PD at " +
                    describe(pd));
  }
  LinkGeometry g;
  g.slant_distance = euclidean_distance(led, pd);
  g.vertical_separation = led.z - pd.z;
  // d^2 - V^2 can go a few ulp negative when the PD sits on the LED axis.
  g.horizontal_distance =
      std::sqrt(std::max(0.0, g.slant_distance * g.slant_distance -
                                  g.vertical_separation *
                                      g.vertical_separation));
  const double ratio = std::min(1.0, g.vertical_separation / g.slant_distance);
  g.elevation_angle = Degrees::from_radians(std::asin(ratio));
  g.normal_angle = Degrees(90.0) - g.elevation_angle;
  return g;
}

std::vector<Point3> diagonal_positions(const RoomSpec& room, std::size_t count,
                                       const Point3& start, const Point3& end) {
  if (count < 2) {
    throw Error(ErrorKind::DomainError,
                "diagonal needs at least 2 positions, got " +
                    std::to_string(count));
  }
  if (start.z != 0.0 || end.z != 0.0) {
    throw Error(ErrorKind::DomainError,
                "diagonal endpoints must lie on the floor (z = 0)");
  }
  std::vector<Point3> out;
  out.reserve(count);
  const double steps = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / steps;
    Point3 p{start.x + (end.x - start.x) * t, start.y + (end.y - start.y) * t,
             0.0};
    if (i + 1 == count) p = end;
    if (!room.on_floor(p)) {
      throw Error(ErrorKind::OutOfRoom,
                  "position " + std::to_string(i + 1) + " " + describe(p) +
                      " leaves the floor");
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace vlcpos
