// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "vlcpos/estimator.hpp"
#include "vlcpos/reference_data.hpp"
#include "vlcpos/replication.hpp"

namespace vlcpos {
namespace {

const ReplicationReport& report() {
  static const ReplicationReport r = replication_report(default_config());
  return r;
}

const ReplicationCheck& check(std::string_view id) {
  const ReplicationCheck* c = report().find(id);
  if (!c) throw std::runtime_error("missing check " + std::string(id));
  return *c;
}

TEST(PublishedTable, RowsReproducedByErrorMetric) {
  for (std::size_t i = 0; i < reference::kPositionTable.size(); ++i) {
    const auto& row = reference::kPositionTable[i];
    EXPECT_NEAR(positioning_error(row.actual, row.estimated), row.error, 5e-4)
        << "row " << i + 1;
  }
}

TEST(Replication, AllChecksPassOnDefaults) {
  for (const auto& c : report().checks) {
    EXPECT_TRUE(c.passed) << c.id << ": " << c.description;
  }
  EXPECT_TRUE(report().all_passed());
}

TEST(Replication, MeanErrorReproduced) {
  const auto& c = check("table.mean_error");
  EXPECT_EQ(c.verdict, Verdict::Reproduced);
  EXPECT_NEAR(c.computed, 0.04207, 1e-12);
  EXPECT_EQ(c.published, 0.042);
}

TEST(Replication, DocumentedGapsStayNotReproducible) {
  const auto& watts = check("power.absolute_watts");
  EXPECT_EQ(watts.verdict, Verdict::NotReproducible);
  EXPECT_NEAR(watts.computed, 2.685739664675734e-06, 1e-15);
  EXPECT_EQ(watts.published, 4.5);

  const auto& coords = check("estimate.published_coordinates");
  EXPECT_EQ(coords.verdict, Verdict::NotReproducible);
  EXPECT_EQ(coords.published, 0.0136);
  EXPECT_NEAR(coords.computed, 0.7856688088703634, 1e-8);
  EXPECT_NE(coords.note.find("2.4864"), std::string::npos);
  EXPECT_NE(coords.note.find("2.4300"), std::string::npos);

  EXPECT_EQ(check("table.row8_as_printed").verdict, Verdict::NotReproducible);
  EXPECT_EQ(check("channel.lambertian_order").verdict, Verdict::NotReproducible);
  EXPECT_EQ(check("power.decay_ratio").verdict, Verdict::NotReproducible);
}

TEST(Replication, TrendsGraded) {
  EXPECT_EQ(check("pipeline.error_trend").verdict, Verdict::TrendOnly);
  EXPECT_NEAR(check("pipeline.error_trend").computed, 1.012108535671866, 1e-8);
  EXPECT_EQ(check("angle.family_order").verdict, Verdict::TrendOnly);
  EXPECT_EQ(check("power.decay_trend").verdict, Verdict::TrendOnly);
  EXPECT_DOUBLE_EQ(check("power.linearity").computed, 15.0 / 8.0);
}

TEST(Replication, RegressionIsDetected) {
  ScenarioConfig c = default_config();
  c.pd_positions.push_back(c.pd_positions.back());  // repeated distance
  const ReplicationReport r = replication_report(c);
  EXPECT_FALSE(r.find("power.decay_trend")->passed);
  EXPECT_FALSE(r.find("geometry.diagonal")->passed);
  EXPECT_FALSE(r.all_passed());
}

TEST(Replication, AssumptionsListVerticalSeparation) {
  ASSERT_FALSE(report().assumptions.empty());
  EXPECT_NE(report().assumptions.front().find("vertical"), std::string::npos);
}

}  // namespace
}  // namespace vlcpos
