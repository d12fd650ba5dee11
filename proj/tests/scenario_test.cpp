// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <map>

#include "support/expect_error.hpp"
#include "vlcpos/scenario.hpp"

namespace vlcpos {
namespace {

using testing::kind_of;

TEST(DefaultConfig, MatchesPublishedParameters) {
  const ScenarioConfig c = default_config();
  EXPECT_EQ(c.room, (RoomSpec{5.0, 5.0, 3.0}));
  EXPECT_EQ(c.led.position, (Point3{2.5, 2.5, 3.0}));
  EXPECT_EQ(c.led.half_power_angle.value(), 60.0);
  EXPECT_FALSE(c.led.lambertian_order_override.has_value());
  EXPECT_EQ(c.pd_template.area, 2.25e-6);
  EXPECT_EQ(c.pd_template.filter_gain, 1.0);
  EXPECT_EQ(c.pd_template.refractive_index, 1.5);
  EXPECT_EQ(c.pd_template.fov.value(), 90.0);
  EXPECT_EQ(c.transmit_powers, (std::vector<double>{8, 10, 12, 15}));
  ASSERT_EQ(c.sweep_elevations.size(), 4u);
  EXPECT_EQ(c.sweep_elevations.front().value(), 60.0);
  EXPECT_EQ(c.pd_positions.size(), 10u);
  EXPECT_EQ(c.azimuth.value(), 225.0);
  EXPECT_NO_THROW(validate(c));
}

TEST(Validate, RejectsOffFloorPositions) {
  ScenarioConfig c = default_config();
  c.pd_positions[3].z = 0.5;
  EXPECT_EQ(kind_of([&] { validate(c); }), ErrorKind::ValidationError);
  c = default_config();
  c.pd_template.position = {2.5, 2.5, 1.0};
  EXPECT_EQ(kind_of([&] { validate(c); }), ErrorKind::ValidationError);
  c = default_config();
  c.pd_positions.push_back({6.0, 1.0, 0.0});
  EXPECT_EQ(kind_of([&] { validate(c); }), ErrorKind::ValidationError);
  c = default_config();
  c.sweep_elevations.push_back(Degrees(0.0));
  EXPECT_EQ(kind_of([&] { validate(c); }), ErrorKind::ValidationError);
}

TEST(PositionSweep, DefaultRows) {
  const SweepResult r = run_position_sweep(default_config());
  ASSERT_EQ(r.rows.size(), 10u);
  EXPECT_DOUBLE_EQ(r.rows.front().geometry.slant_distance, 3.0);
  EXPECT_NEAR(r.rows.back().geometry.slant_distance, 4.5618, 5e-5);
  EXPECT_EQ(r.rows.front().estimate.positioning_error, 0.0);
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const SweepRow& row = r.rows[i];
    EXPECT_EQ(row.index, i + 1);
    EXPECT_EQ(row.estimate.estimated.x, row.estimate.estimated.y);
    EXPECT_EQ(row.estimate.estimated.z, 0.0);
    EXPECT_NEAR(row.estimate.inverted_distance, row.geometry.slant_distance,
                1e-9 * row.geometry.slant_distance);
    if (i > 0) {
      EXPECT_LT(row.channel.received_power, r.rows[i - 1].channel.received_power);
      EXPECT_GE(row.estimate.positioning_error,
                r.rows[i - 1].estimate.positioning_error);
    }
  }
}

TEST(PositionSweep, SummaryConsistency) {
  const SweepResult r = run_position_sweep(default_config());
  double sum = 0.0;
  for (const auto& row : r.rows) sum += row.estimate.positioning_error;
  EXPECT_NEAR(r.summary.average_error, sum / 10.0, 1e-12);
  EXPECT_EQ(r.summary.min_error, 0.0);
  EXPECT_EQ(r.summary.max_error, r.rows.back().estimate.positioning_error);
  EXPECT_EQ(r.summary.max_power, r.rows.front().channel.received_power);
  EXPECT_EQ(r.summary.min_power, r.rows.back().channel.received_power);
}

TEST(PositionSweep, BitIdenticalAcrossThreadCounts) {
  const ScenarioConfig c = default_config();
  const SweepResult serial = run_position_sweep(c, {1});
  for (unsigned threads : {2u, 3u, 8u, 0u}) {
    const SweepResult par = run_position_sweep(c, {threads});
    ASSERT_EQ(par.rows.size(), serial.rows.size());
    for (std::size_t i = 0; i < serial.rows.size(); ++i) {
      const auto& a = serial.rows[i];
      const auto& b = par.rows[i];
      EXPECT_EQ(std::memcmp(&a.estimate.estimated, &b.estimate.estimated,
                            sizeof(Point3)),
                0);
      EXPECT_EQ(a.channel.received_power, b.channel.received_power);
      EXPECT_EQ(a.estimate.positioning_error, b.estimate.positioning_error);
    }
  }
}

TEST(PositionSweep, ErrorsCarryPositionIndex) {
  ScenarioConfig c = default_config();
  c.led.position.z = 0.0;  // degenerate on purpose, bypassing validate
  try {
    run_position_sweep(c, {4});
    FAIL() << "expected LedNotAbovePd";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LedNotAbovePd);
    EXPECT_NE(std::string(e.what()).find("position 1"), std::string::npos);
  }
}

TEST(PowerSweep, GroupedAndDecreasing) {
  const auto rows = run_power_distance_sweep(default_config());
  ASSERT_EQ(rows.size(), 40u);
  std::map<double, std::vector<PowerDistanceRow>> groups;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    EXPECT_EQ(rows[k].transmit_power, (std::vector<double>{8, 10, 12, 15})[k / 10]);
    groups[rows[k].transmit_power].push_back(rows[k]);
  }
  for (const auto& [p, g] : groups) {
    for (std::size_t i = 1; i < g.size(); ++i) {
      EXPECT_GT(g[i].distance, g[i - 1].distance);
      EXPECT_LT(g[i].received_power, g[i - 1].received_power);
    }
  }
  for (std::size_t i = 0; i < 10; ++i) {
    EXPECT_NEAR(groups[15.0][i].received_power,
                1.875 * groups[8.0][i].received_power,
                1e-14 * groups[15.0][i].received_power);
  }
  // (4.5618 / 3)^(m+3) with m = 1.
  EXPECT_NEAR(groups[15.0].front().received_power /
                  groups[15.0].back().received_power,
              5.346268840000001, 1e-9);
}

TEST(AngleSweep, FamiliesOrderedAndInverseSquare) {
  const ScenarioConfig c = default_config();
  const auto rows = run_angle_sweep(c);
  ASSERT_EQ(rows.size(), 4u * c.distance_samples);
  std::map<double, std::vector<AngleDistanceRow>> fam;
  for (const auto& r : rows) fam[r.elevation.value()].push_back(r);
  ASSERT_EQ(fam.size(), 4u);
  const auto& f90 = fam[90.0];
  EXPECT_DOUBLE_EQ(f90.front().distance, 3.0);
  EXPECT_NEAR(f90.back().distance, 4.561775969948546, 1e-12);
  for (std::size_t i = 0; i < c.distance_samples; ++i) {
    EXPECT_GT(fam[90.0][i].received_power, fam[80.0][i].received_power);
    EXPECT_GT(fam[80.0][i].received_power, fam[70.0][i].received_power);
    EXPECT_GT(fam[70.0][i].received_power, fam[60.0][i].received_power);
    for (const auto& [e, series] : fam) {
      const double ratio = series[0].received_power / series[i].received_power;
      const double d_ratio = series[i].distance / series[0].distance;
      EXPECT_NEAR(ratio, d_ratio * d_ratio, 1e-12 * ratio);
    }
  }
}

TEST(AngleSweep, RejectsBadElevations) {
  ScenarioConfig c = default_config();
  c.sweep_elevations = {Degrees(0.0)};
  EXPECT_EQ(kind_of([&] { run_angle_sweep(c); }), ErrorKind::DomainError);
  c.sweep_elevations = {Degrees(95.0)};
  EXPECT_EQ(kind_of([&] { run_angle_sweep(c); }), ErrorKind::DomainError);
  c.sweep_elevations.clear();
  EXPECT_EQ(kind_of([&] { run_angle_sweep(c); }), ErrorKind::EmptyInput);
}

TEST(Linspace, InclusiveEndpoints) {
  const auto g = linspace(3.0, 4.5, 4);
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g.front(), 3.0);
  EXPECT_EQ(g.back(), 4.5);
  EXPECT_DOUBLE_EQ(g[1], 3.5);
  EXPECT_EQ(kind_of([] { linspace(0, 1, 1); }), ErrorKind::DomainError);
}

}  // namespace
}  // namespace vlcpos
