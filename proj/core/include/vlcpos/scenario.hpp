// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "vlcpos/channel.hpp"
#include "vlcpos/estimator.hpp"
#include "vlcpos/geometry.hpp"

namespace vlcpos {

struct ScenarioConfig {
  RoomSpec room;
  LedSpec led;
  /// Per-run PD; its position is replaced by each entry of `pd_positions`.
  /// The template position itself is what one-shot estimation scores against.
  PdSpec pd_template;
  std::vector<Point3> pd_positions;
  std::vector<double> transmit_powers;  // W
  std::vector<Degrees> sweep_elevations;
  Degrees azimuth{225.0};
  /// Sample count of the distance axis in the fixed-angle sweep.
  std::size_t distance_samples = 50;

  bool operator==(const ScenarioConfig&) const = default;
};

/// The published 5 x 5 x 3 m room, centered ceiling LED and ten-point
/// half-diagonal.
ScenarioConfig default_config();

/// Throws ValidationError naming the first violated invariant.
void validate(const ScenarioConfig& config);

struct SweepRow {
  std::size_t index = 0;  // 1-based position index
  Point3 position;
  LinkGeometry geometry;
  ChannelSample channel;
  EstimateRecord estimate;
};

struct SweepSummary {
  double average_error = 0.0;
  double min_error = 0.0;
  double max_error = 0.0;
  double min_power = 0.0;
  double max_power = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  SweepSummary summary;
};

/// Number of worker threads for sweeps. 0 picks the hardware concurrency.
struct RunOptions {
  unsigned threads = 0;
};

/// Forward channel, RSS inversion, CSA estimate and error per configured
/// position, in configured order. Errors carry the failing position index.
SweepResult run_position_sweep(const ScenarioConfig& config,
                               RunOptions options = {});

struct PowerDistanceRow {
  double transmit_power = 0.0;
  double distance = 0.0;
  double received_power = 0.0;
};

/// Every configured transmit power against every configured position; grouped
/// by power in configured order, distance ascending within a group.
std::vector<PowerDistanceRow> run_power_distance_sweep(
    const ScenarioConfig& config, RunOptions options = {});

struct AngleDistanceRow {
  Degrees elevation;
  double distance = 0.0;
  double received_power = 0.0;
};

/// Fixed-angle families: for each configured elevation the angle factor is
/// held constant while the slant distance sweeps the span of the configured
/// positions (inclusive, `distance_samples` points). Uses the LED's
/// configured transmit power.
std::vector<AngleDistanceRow> run_angle_sweep(const ScenarioConfig& config,
                                              RunOptions options = {});

/// Inclusive evenly spaced grid.
std::vector<double> linspace(double first, double last, std::size_t count);

}  // namespace vlcpos
