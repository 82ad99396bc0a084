// Copyright 2026 The dpapprox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpapprox/metrics.h"

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "dpapprox/approximator.h"
#include "dpapprox/ingest.h"
#include "dpapprox/segmentation.h"
#include "oracles.h"

namespace dpapprox {
namespace {

TEST(MetricsTest, SquareCorners) {
  const DigitalCurve sq = testing::Square2();
  const MetricsReport r = ComputeMetrics(sq, DominantPointSet({0, 2, 4, 6}, 8));
  EXPECT_EQ(r.n, 8u);
  EXPECT_EQ(r.m, 4u);
  EXPECT_DOUBLE_EQ(r.cr, 2.0);
  EXPECT_EQ(r.ise, 0.0);
  EXPECT_EQ(r.max_dev, 0.0);
  EXPECT_TRUE(std::isinf(r.fom));
  EXPECT_EQ(r.we, 0.0);
  EXPECT_EQ(r.we2, 0.0);
  EXPECT_DOUBLE_EQ(r.area, 4.0);
  EXPECT_DOUBLE_EQ(r.perimeter, 8.0);
  EXPECT_DOUBLE_EQ(r.compactness, 0.0625);
}

TEST(MetricsTest, RatioIdentities) {
  const DigitalCurve c = testing::LoadFixture("leaf.txt");
  for (std::size_t m : {21u, 16u, 9u, 3u}) {
    const MetricsReport r = ComputeMetrics(c, EliminateToCount(c, m).result);
    ASSERT_GT(r.ise, 0.0);
    EXPECT_DOUBLE_EQ(r.cr, static_cast<double>(r.n) / static_cast<double>(r.m));
    EXPECT_NEAR(r.fom, r.cr / r.ise, 1e-12 * r.fom);
    EXPECT_NEAR(r.we, r.ise / r.cr, 1e-12 * r.we);
    EXPECT_NEAR(r.we2, r.ise / (r.cr * r.cr), 1e-12 * r.we2);
  }
}

TEST(MetricsTest, FillRatiosOnPublishedFigures) {
  MetricsReport r;
  r.n = 60;
  r.m = 15;
  r.ise = 4.87;
  FillRatios(r);
  EXPECT_NEAR(r.fom, 0.82, 0.005);
  EXPECT_NEAR(r.we, 1.22, 0.005);

  MetricsReport big;
  big.n = 5814;
  big.m = 100;
  big.ise = 453.91;
  FillRatios(big);
  EXPECT_NEAR(big.we2, 0.134, 0.0005);
}

TEST(MetricsTest, DeviationsMatchOracle) {
  const DigitalCurve disc = testing::QuarterDisc();
  const DominantPointSet d({0, 7, 12}, disc.size());
  const std::vector<double> dev = PerPointDeviations(disc, d);
  ASSERT_EQ(dev.size(), disc.size());
  double ise = 0.0;
  for (std::size_t i = 0; i < disc.size(); ++i) {
    std::size_t a = 0, b = 7;
    if (i >= 7 && i <= 12) a = 7, b = 12;
    if (i >= 12) a = 12, b = 0;
    const double want = testing::OracleSegmentDistance(disc[a], disc[b], disc[i]);
    EXPECT_NEAR(dev[i], want, 1e-12) << i;
    ise += want * want;
  }
  const MetricsReport r = ComputeMetrics(disc, d);
  EXPECT_NEAR(r.ise, ise, 1e-12);
  EXPECT_NEAR(r.ise, 9.0, 1e-12);  // (1 + 4 + 4 + 4 + 4 + 1) / 2
}

TEST(MetricsTest, AllDominantHasZeroError) {
  const DigitalCurve c = testing::LoadFixture("infinity.txt");
  std::vector<std::size_t> all(c.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const MetricsReport r = ComputeMetrics(c, DominantPointSet(all, c.size()));
  EXPECT_EQ(r.ise, 0.0);
  EXPECT_EQ(r.max_dev, 0.0);
  EXPECT_DOUBLE_EQ(r.cr, 1.0);
  EXPECT_TRUE(std::isinf(r.fom));
}

TEST(MetricsTest, ScaleInvariantShapeTerms) {
  const DigitalCurve c = testing::LoadFixture("chromosome.txt");
  std::vector<Point> scaled;
  // Off-grid so the scaled steps need not be king moves.
  for (const Point& p : c.points()) scaled.push_back({p.x * 3 + 0.25, p.y * 3});
  const DigitalCurve big = BuildCurve(scaled, true);
  const DominantPointSet d = EliminateToCount(c, 8).result;
  const MetricsReport a = ComputeMetrics(c, d);
  const MetricsReport b = ComputeMetrics(big, d);
  EXPECT_NEAR(b.ise, 9 * a.ise, 1e-9 * b.ise);
  EXPECT_NEAR(b.area, 9 * a.area, 1e-9 * b.area);
  EXPECT_NEAR(b.perimeter, 3 * a.perimeter, 1e-9 * b.perimeter);
  EXPECT_NEAR(b.compactness, a.compactness, 1e-12);
}

TEST(MetricsTest, QuarterTurnsAreBitIdentical) {
  for (const char* name : {"chromosome.txt", "leaf.txt", "semicircle.txt",
                           "infinity.txt", "square.txt"}) {
    const DigitalCurve c = testing::LoadFixture(name);
    const std::vector<double> angles = {0, 90, 180, 270, 360};
    const std::size_t m = std::min<std::size_t>(6, Segment(c).indices.size());
    const auto rows = RotationReport(c, angles, m);
    ASSERT_EQ(rows.size(), angles.size());
    for (std::size_t i = 1; i < rows.size(); ++i) {
      EXPECT_EQ(rows[i].max_dev, rows[0].max_dev) << name << " " << angles[i];
      EXPECT_EQ(rows[i].ise, rows[0].ise) << name << " " << angles[i];
      EXPECT_EQ(rows[i].area, rows[0].area) << name << " " << angles[i];
      EXPECT_EQ(rows[i].perimeter, rows[0].perimeter) << name;
      EXPECT_EQ(rows[i].compactness, rows[0].compactness) << name;
    }
  }
}

TEST(MetricsTest, RotationReportAnglesAndCompactness) {
  const DigitalCurve bell = testing::LoadFixture("bell-7.pbm");
  const std::vector<double> angles = {0, 20, 45};
  const auto rows = RotationReport(bell, angles, 20);
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].angle_deg, angles[i]);
    EXPECT_NEAR(rows[i].compactness,
                rows[i].area / (rows[i].perimeter * rows[i].perimeter), 1e-15);
  }
}

}  // namespace
}  // namespace dpapprox
