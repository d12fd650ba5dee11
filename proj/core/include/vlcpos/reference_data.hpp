// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string_view>

#include "vlcpos/geometry.hpp"

namespace vlcpos::reference {

/// Version tag of the embedded published dataset; bump when values change.
inline constexpr std::string_view kDatasetVersion = "csa-rss-2022/1";

/// One published row of actual vs. estimated PD position with its error.
struct PublishedRow {
  Point3 actual;
  Point3 estimated;
  double error = 0.0;
};

/// Published rows with the row-8 y coordinate corrected to 0.5591 (printed as
/// 0.5519, an evident transposition: the printed error and the stated X/Y
/// symmetry both require 0.5591).
extern const std::array<PublishedRow, 10> kPositionTable;

/// Row-8 estimated y exactly as printed.
inline constexpr double kRow8EstimatedYAsPrinted = 0.5519;

inline constexpr double kPublishedMeanError = 0.042;         // m
inline constexpr double kPublishedEightyPercentMean = 0.032;  // m ("3.2 cm")
inline constexpr double kPublishedFirstLastGap = 0.0784;      // m
inline constexpr double kPublishedCenterDistance = 3.0;       // m
inline constexpr double kPublishedCornerDistance = 4.56;      // m
inline constexpr double kPublishedLambertianOrder = 1.3;

/// Headline figure readings, watts.
inline constexpr double kPublishedPeakPower = 4.5;          // 15 W, 3 m, 90 deg
inline constexpr double kPublishedCornerPower15W = 1.92;    // 15 W, 4.56 m
inline constexpr double kPublishedPeakPower8W = 2.34;       // 8 W, 3 m
inline constexpr double kPublishedCornerPower8W = 1.02;     // 8 W, 4.56 m
/// Gap between the 90 and 60 deg fixed-angle families at 3 m, watts.
inline constexpr double kPublishedAngleFamilyGap = 3.73;

}  // namespace vlcpos::reference
