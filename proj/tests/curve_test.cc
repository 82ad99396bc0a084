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

#include "dpapprox/curve.h"

#include <random>

#include <gtest/gtest.h>

#include "dpapprox/error.h"
#include "oracles.h"

namespace dpapprox {
namespace {

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(BuildCurveTest, UnitSquareRing) {
  const DigitalCurve c = BuildCurve({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, true);
  EXPECT_EQ(c.size(), 4u);
  EXPECT_TRUE(c.closed());
  EXPECT_TRUE(c.on_grid());
}

TEST(BuildCurveTest, CollapsesConsecutiveDuplicates) {
  const DigitalCurve c = BuildCurve({{0, 0}, {0, 0}, {1, 0}}, false);
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c[1], (Point{1, 0}));
}

TEST(BuildCurveTest, CollapsesRepeatedClosingPoint) {
  const DigitalCurve c =
      BuildCurve({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}}, true);
  EXPECT_EQ(c.size(), 4u);
}

TEST(BuildCurveTest, Errors) {
  EXPECT_EQ(CodeOf([] { BuildCurve({{0, 0}, {2, 0}}, true); }),
            ErrorCode::kTooFewPoints);
  EXPECT_EQ(CodeOf([] { BuildCurve({{0, 0}, {2, 0}, {2, 1}}, true); }),
            ErrorCode::kNonAdjacent);
  // The closing step counts too.
  EXPECT_EQ(CodeOf([] { BuildCurve({{0, 0}, {1, 0}, {2, 0}}, true); }),
            ErrorCode::kNonAdjacent);
  EXPECT_EQ(CodeOf([] { BuildCurve({}, false); }), ErrorCode::kTooFewPoints);
}

TEST(BuildCurveTest, GapOfTwoOnGridIsNonAdjacent) {
  EXPECT_EQ(CodeOf([] { BuildCurve({{0, 0}, {2, 0}}, false); }),
            ErrorCode::kNonAdjacent);
}

TEST(BuildCurveTest, RealCurvesSkipAdjacency) {
  const DigitalCurve c = BuildCurve({{0, 0}, {2.5, 0}, {1, 3}}, true);
  EXPECT_FALSE(c.on_grid());
}

TEST(BuildCurveTest, Idempotent) {
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    const DigitalCurve c = testing::RandomBlobCurve(rng);
    std::vector<Point> pts(c.points().begin(), c.points().end());
    EXPECT_EQ(BuildCurve(pts, true), c);
  }
}

TEST(ChainCodeTest, Examples) {
  EXPECT_EQ(ComputeChainCode(BuildCurve({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, true))
                .codes,
            (std::vector<std::uint8_t>{0, 2, 4, 6}));
  EXPECT_EQ(ComputeChainCode(BuildCurve({{0, 0}, {1, 1}, {2, 2}}, false)).codes,
            (std::vector<std::uint8_t>{1, 1}));
  EXPECT_EQ(CodeOf([] {
              ComputeChainCode(BuildCurve({{0, 0}, {1.5, 0}, {0, 1}}, true));
            }),
            ErrorCode::kNotOnGrid);
}

TEST(ChainCodeTest, EachCodeIsAKingMove) {
  for (std::uint8_t c = 0; c < 8; ++c) {
    const Point d = FreemanDelta(c);
    EXPECT_EQ(ChessDistance(d, {0, 0}), 1.0);
    EXPECT_EQ(FreemanCode(d), c);
  }
}

TEST(ChainCodeTest, ReplayReconstructsCurve) {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    const DigitalCurve c = testing::RandomBlobCurve(rng);
    const ChainCode code = ComputeChainCode(c);
    ASSERT_EQ(code.codes.size(), c.size());
    const auto replay = ReplayChainCode(c[0], code, true);
    EXPECT_TRUE(std::equal(replay.begin(), replay.end(), c.points().begin(),
                           c.points().end()));
  }
  const DigitalCurve open = BuildCurve({{0, 0}, {1, 1}, {2, 1}, {3, 0}}, false);
  const ChainCode code = ComputeChainCode(open);
  EXPECT_EQ(code.codes.size(), 3u);
  const auto replay = ReplayChainCode(open[0], code, false);
  EXPECT_TRUE(std::equal(replay.begin(), replay.end(), open.points().begin(),
                         open.points().end()));
}

TEST(ArcPointsTest, Examples) {
  const DigitalCurve c = BuildCurve(
      {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {1, 1}, {0, 1}}, true);
  EXPECT_EQ(ArcIndices(c, 1, 4), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(ArcIndices(c, 4, 1), (std::vector<std::size_t>{5, 0}));
  EXPECT_TRUE(ArcIndices(c, 2, 3).empty());
  EXPECT_EQ(ArcPoints(c, 4, 1), (std::vector<Point>{{0, 1}, {0, 0}}));
}

TEST(ArcPointsTest, OpenCurveWrapRejected) {
  const DigitalCurve c = BuildCurve({{0, 0}, {1, 0}, {2, 0}, {3, 0}}, false);
  EXPECT_EQ(ArcIndices(c, 0, 3), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(CodeOf([&] { ArcIndices(c, 3, 0); }), ErrorCode::kOpenCurveWrap);
  EXPECT_EQ(CodeOf([&] { ArcIndices(c, 1, 1); }), ErrorCode::kInvalidArgument);
}

TEST(ArcPointsTest, ComplementaryArcsCoverAllButEndpoints) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const DigitalCurve c = testing::RandomBlobCurve(rng);
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        EXPECT_EQ(ArcIndices(c, i, j).size() + ArcIndices(c, j, i).size(), n - 2);
        EXPECT_EQ(ArcLength(n, i, j), ArcIndices(c, i, j).size());
      }
    }
  }
}

TEST(DominantPointSetTest, Validation) {
  EXPECT_NO_THROW(DominantPointSet({0, 2, 4}, 8));
  EXPECT_EQ(CodeOf([] { DominantPointSet({0, 2}, 8); }), ErrorCode::kTooFewPoints);
  EXPECT_EQ(CodeOf([] { DominantPointSet({0, 4, 2}, 8); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { DominantPointSet({0, 2, 8}, 8); }),
            ErrorCode::kInvalidArgument);
}

TEST(AreaTest, RectangleRings) {
  for (int a = 1; a <= 6; ++a) {
    for (int b = 1; b <= 6; ++b) {
      // Counterclockwise corners.
      const std::vector<Point> rect{{0, 0}, {double(a), 0}, {double(a), double(b)},
                                    {0, double(b)}};
      EXPECT_EQ(SignedDoubleArea(rect), 2.0 * a * b);
    }
  }
}

}  // namespace
}  // namespace dpapprox
