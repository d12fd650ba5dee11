// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "vlcpos/scenario.hpp"

namespace vlcpos {

/// Scenario configuration text.
///
/// Line-oriented `key = value` pairs grouped under `[room]`, `[led]`, `[pd]`
/// and `[sweep]` headers; a key may also be written fully qualified
/// (`led.half_power_angle = 60`) anywhere. `#` starts a comment. Values are
/// numbers, `(x, y, z)` points, or comma-separated lists of either.
///
///   [room]   width length height                          (m)
///   [led]    position transmit_power half_power_angle lambertian_order
///   [pd]     position area (m^2) or area_mm2, fov filter_gain
///            refractive_index
///   [sweep]  count start end | positions
///            transmit_powers elevations azimuth samples
///
/// Keys left out keep their published defaults. `positions` replaces the
/// `count`/`start`/`end` diagonal generator. Unknown keys and duplicates are
/// rejected with a ParseError; a config that parses but breaks an invariant
/// raises ValidationError.
ScenarioConfig parse_config(std::string_view text);

/// Reads and parses a file; IoError when it cannot be read.
ScenarioConfig load_config(const std::filesystem::path& path);

/// Canonical text form; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ScenarioConfig& config);

/// FNV-1a 64 of the canonical text, as 16 hex digits.
std::string config_hash(const ScenarioConfig& config);

}  // namespace vlcpos
