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

#include "dpapprox/rdp.h"

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "dpapprox/error.h"
#include "dpapprox/metrics.h"
#include "oracles.h"

namespace dpapprox {
namespace {

std::vector<std::size_t> ToVector(const DominantPointSet& d) {
  return {d.indices().begin(), d.indices().end()};
}

double MaxDeviation(const DigitalCurve& c, const DominantPointSet& d) {
  return ComputeMetrics(c, d).max_dev;
}

TEST(RdpTest, SquareKeepsCorners) {
  const DigitalCurve sq = testing::Square2();
  EXPECT_EQ(ToVector(Rdp(sq, 0.5)), (std::vector<std::size_t>{0, 2, 4, 6}));
  EXPECT_EQ(ToVector(Rdp(sq, 0.0)), (std::vector<std::size_t>{0, 2, 4, 6}));
}

TEST(RdpTest, ZeroEpsilonKeepsOnlyBends) {
  const DigitalCurve disc = testing::QuarterDisc();
  EXPECT_EQ(ToVector(Rdp(disc, 0.0)),
            (std::vector<std::size_t>{0, 2, 5, 7, 12}));
}

TEST(RdpTest, AlwaysAtLeastThreeVertices) {
  const DigitalCurve thin =
      BuildCurve({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {2, 1}, {1, 1}}, true);
  EXPECT_GE(Rdp(thin, 100.0).size(), 3u);
  EXPECT_GE(Rdp(testing::LoadFixture("leaf.txt"), 1e6).size(), 3u);
}

TEST(RdpTest, EpsilonBoundsDeviation) {
  for (const char* name : {"chromosome.txt", "leaf.txt", "semicircle.txt",
                           "infinity.txt"}) {
    const DigitalCurve c = testing::LoadFixture(name);
    for (double eps : {0.0, 0.5, 1.0, 2.0, 4.0}) {
      const DominantPointSet d = Rdp(c, eps);
      if (d.size() > 3) {
        EXPECT_LE(MaxDeviation(c, d), eps + 1e-12) << name << " " << eps;
      }
    }
  }
}

TEST(RdpTest, CountNonIncreasingInEpsilon) {
  const DigitalCurve c = testing::LoadFixture("leaf.txt");
  std::size_t last = c.size() + 1;
  for (double eps = 0.0; eps < 10.0; eps += 0.05) {
    const std::size_t now = Rdp(c, eps).size();
    EXPECT_LE(now, last) << eps;
    last = now;
  }
}

TEST(RdpTest, RejectsBadInput) {
  EXPECT_THROW(Rdp(testing::Square2(), -1.0), Error);
  const DigitalCurve open = BuildCurve({{0, 0}, {1, 0}, {2, 1}}, false);
  EXPECT_THROW(Rdp(open, 1.0), Error);
  EXPECT_THROW(RdpToCount(testing::Square2(), 2), Error);
}

TEST(RdpToCountTest, HitsRequestedCounts) {
  for (const char* name : {"chromosome.txt", "leaf.txt", "semicircle.txt",
                           "infinity.txt"}) {
    const DigitalCurve c = testing::LoadFixture(name);
    const std::size_t most = Rdp(c, 0.0).size();
    for (std::size_t m = 3; m <= most; ++m) {
      const RdpCountResult r = RdpToCount(c, m);
      EXPECT_GE(r.points.size(), m) << name;
      EXPECT_EQ(r.points, Rdp(c, r.epsilon));
      // Overshoot only when no epsilon yields a count in [m, size).
      if (r.points.size() > m) {
        for (double eps = 0.0; eps < 5.0; eps += 0.01) {
          const std::size_t k = Rdp(c, eps).size();
          EXPECT_FALSE(k >= m && k < r.points.size()) << name << " " << m;
        }
      }
    }
  }
}

TEST(RdpToCountTest, ExactOnFixtures) {
  const DigitalCurve c = testing::LoadFixture("chromosome.txt");
  EXPECT_EQ(RdpToCount(c, 16).points.size(), 16u);
  EXPECT_EQ(RdpToCount(c, 6).points.size(), 6u);
  // 15 is skipped: the count drops from 16 straight to 14.
  EXPECT_EQ(RdpToCount(c, 15).points.size(), 16u);
}

}  // namespace
}  // namespace dpapprox
