// SPDX-License-Identifier: Apache-2.0
//
// Independent reference computations for tests. Nothing here calls into the
// library's numeric paths: distances come straight from coordinates, angles
// from cosine ratios, the Lambertian order from root finding.
#pragma once

#include <cmath>
#include <numbers>

namespace vlcpos::oracle {

using Real = long double;

inline constexpr Real kPi = std::numbers::pi_v<long double>;

inline Real deg2rad(Real d) { return d * kPi / 180.0L; }

struct Xyz {
  Real x, y, z;
};

inline Real distance(Xyz a, Xyz b) {
  const Real dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

/// Bisection for m with cos^m(half_power) = 1/2.
inline Real lambertian_order_by_root(Real half_power_deg) {
  const Real c = std::cos(deg2rad(half_power_deg));
  Real lo = 1e-6L, hi = 1e4L;
  for (int i = 0; i < 400; ++i) {
    const Real mid = (lo + hi) / 2;
    // cos^m decreases in m for 0 < c < 1.
    if (std::pow(c, mid) > 0.5L) lo = mid; else hi = mid;
  }
  return (lo + hi) / 2;
}

/// Received power of a downward LED and upward PD, with the angle factors
/// taken as the cosine ratio V/d rather than any angle. FOV assumed to admit
/// the link.
inline Real coplanar_power(Real p_trans, Real m, Real area, Real filter_gain,
                           Real n, Real fov_deg, Xyz led, Xyz pd) {
  const Real d = distance(led, pd);
  const Real cos_angle = (led.z - pd.z) / d;
  const Real s = std::sin(deg2rad(fov_deg));
  const Real intensity = (m + 1) / (2 * kPi) * std::pow(cos_angle, m);
  const Real a_eff = area * filter_gain * (n * n / (s * s)) * cos_angle;
  return p_trans * intensity * a_eff / (d * d);
}

/// Fused CSA offset evaluated with the complementary and supplementary angles
/// built by hand.
inline Real fused_offset(Real d_hor, Real incidence_deg) {
  const Real comp = 90.0L - incidence_deg;
  const Real supp = 90.0L + incidence_deg;
  return (d_hor * std::cos(deg2rad(comp)) + d_hor * std::sin(deg2rad(supp))) / 2;
}

}  // namespace vlcpos::oracle
