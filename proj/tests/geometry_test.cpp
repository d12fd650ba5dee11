// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support/expect_error.hpp"
#include "support/oracle.hpp"
#include "vlcpos/error.hpp"
#include "vlcpos/geometry.hpp"

namespace vlcpos {
namespace {

constexpr Point3 kLed{2.5, 2.5, 3.0};
constexpr Point3 kCorner{0.07, 0.07, 0.0};

using testing::kind_of;

TEST(EuclideanDistance, PublishedLinks) {
  EXPECT_DOUBLE_EQ(euclidean_distance(kLed, {2.5, 2.5, 0.0}), 3.0);
  EXPECT_NEAR(euclidean_distance(kLed, kCorner), 4.5618, 5e-5);
  EXPECT_NEAR(euclidean_distance(kLed, kCorner), 4.56, 5e-3);
  EXPECT_EQ(euclidean_distance(kLed, kLed), 0.0);
}

TEST(EuclideanDistance, SymmetricAndMatchesOracle) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    const Point3 a{u(rng), u(rng), u(rng)};
    const Point3 b{u(rng), u(rng), u(rng)};
    EXPECT_EQ(euclidean_distance(a, b), euclidean_distance(b, a));
    const auto ref = oracle::distance({a.x, a.y, a.z}, {b.x, b.y, b.z});
    EXPECT_NEAR(euclidean_distance(a, b), static_cast<double>(ref),
                1e-14 * static_cast<double>(ref) + 1e-15);
  }
}

TEST(LinkGeometry, DirectlyBelow) {
  const LinkGeometry g = link_geometry(kLed, {2.5, 2.5, 0.0});
  EXPECT_DOUBLE_EQ(g.slant_distance, 3.0);
  EXPECT_DOUBLE_EQ(g.vertical_separation, 3.0);
  EXPECT_EQ(g.horizontal_distance, 0.0);
  EXPECT_DOUBLE_EQ(g.elevation_angle.value(), 90.0);
  EXPECT_DOUBLE_EQ(g.normal_angle.value(), 0.0);
}

TEST(LinkGeometry, CornerPosition) {
  const LinkGeometry g = link_geometry(kLed, kCorner);
  // Frozen from a direct evaluation of the coordinates.
  EXPECT_NEAR(g.slant_distance, 4.561775969948546, 1e-12);
  EXPECT_DOUBLE_EQ(g.vertical_separation, 3.0);
  EXPECT_NEAR(g.horizontal_distance, 3.4365389565666207, 1e-12);
  EXPECT_NEAR(g.horizontal_distance, std::sqrt(2.0) * 2.43, 1e-12);
  EXPECT_NEAR(g.elevation_angle.value(), 41.12002732390731, 1e-9);
  EXPECT_NEAR(g.normal_angle.value(), 48.87997267609269, 1e-9);
}

TEST(LinkGeometry, RejectsLedNotAbove) {
  EXPECT_EQ(kind_of([] { link_geometry(kLed, {2.5, 2.5, 3.5}); }),
            ErrorKind::LedNotAbovePd);
  EXPECT_EQ(kind_of([] { link_geometry(kLed, {1.0, 1.0, 3.0}); }),
            ErrorKind::LedNotAbovePd);
}

TEST(LinkGeometry, InvariantsOverRandomLinks) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> xy(0.0, 5.0);
  std::uniform_real_distribution<double> h(0.1, 3.0);
  for (int i = 0; i < 2000; ++i) {
    const Point3 led{xy(rng), xy(rng), 3.0};
    const Point3 pd{xy(rng), xy(rng), 3.0 - h(rng)};
    const LinkGeometry g = link_geometry(led, pd);
    const double d2 = g.slant_distance * g.slant_distance;
    const double closure = g.horizontal_distance * g.horizontal_distance +
                           g.vertical_separation * g.vertical_separation - d2;
    EXPECT_LE(std::abs(closure), 1e-9 * d2);
    EXPECT_NEAR((g.elevation_angle + g.normal_angle).value(), 90.0, 1e-12);
    EXPECT_GE(g.slant_distance, g.vertical_separation);
    EXPECT_GE(g.vertical_separation, 0.0);
    EXPECT_GE(g.elevation_angle.value(), 0.0);
    EXPECT_LE(g.elevation_angle.value(), 90.0);
    EXPECT_GE(g.normal_angle.value(), 0.0);
    EXPECT_LE(g.normal_angle.value(), 90.0);
  }
}

TEST(DiagonalPositions, PublishedTenPoints) {
  const RoomSpec room{5.0, 5.0, 3.0};
  const auto pts = diagonal_positions(room, 10, {2.5, 2.5, 0.0}, kCorner);
  const double published[] = {2.50, 2.23, 1.96, 1.69, 1.42,
                              1.15, 0.88, 0.61, 0.34, 0.07};
  ASSERT_EQ(pts.size(), 10u);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_NEAR(pts[i].x, published[i], 1e-12) << i;
    EXPECT_EQ(pts[i].x, pts[i].y) << i;
    EXPECT_EQ(pts[i].z, 0.0);
  }
  EXPECT_NEAR(pts[1].x, 2.23, 1e-12);
  EXPECT_NEAR(pts[6].x, 0.88, 1e-12);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    EXPECT_NEAR(pts[i - 1].x - pts[i].x, 0.27, 1e-12);
  }
}

TEST(DiagonalPositions, SlantDistanceIncreasesAlongDiagonal) {
  const auto pts =
      diagonal_positions({5.0, 5.0, 3.0}, 10, {2.5, 2.5, 0.0}, kCorner);
  double prev = -1.0;
  for (const auto& p : pts) {
    const double d = euclidean_distance(kLed, p);
    EXPECT_GT(d, prev);
    prev = d;
  }
  EXPECT_DOUBLE_EQ(euclidean_distance(kLed, pts.front()), 3.0);
  EXPECT_NEAR(prev, 4.5618, 5e-5);
}

TEST(DiagonalPositions, TwoPointsAreEndpoints) {
  const Point3 a{1.0, 2.0, 0.0};
  const Point3 b{4.0, 0.5, 0.0};
  const auto pts = diagonal_positions({5.0, 5.0, 3.0}, 2, a, b);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0], a);
  EXPECT_EQ(pts[1], b);
}

TEST(DiagonalPositions, Errors) {
  const RoomSpec room{5.0, 5.0, 3.0};
  EXPECT_EQ(kind_of([&] { diagonal_positions(room, 1, {1, 1, 0}, {2, 2, 0}); }),
            ErrorKind::DomainError);
  EXPECT_EQ(kind_of([&] { diagonal_positions(room, 5, {1, 1, 1}, {2, 2, 0}); }),
            ErrorKind::DomainError);
  EXPECT_EQ(kind_of([&] { diagonal_positions(room, 5, {1, 1, 0}, {6, 6, 0}); }),
            ErrorKind::OutOfRoom);
}

}  // namespace
}  // namespace vlcpos
