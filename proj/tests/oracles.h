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

// Test-only reference implementations. Nothing here calls into the code
// paths it is used to check.

#ifndef DPAPPROX_TESTS_ORACLES_H_
#define DPAPPROX_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <iterator>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dpapprox/approximator.h"
#include "dpapprox/curve.h"
#include "dpapprox/ingest.h"
#include "dpapprox/significance.h"

namespace dpapprox::testing {

inline std::string FixturePath(const std::string& file) {
  return std::string(DPAPPROX_FIXTURE_DIR) + "/" + file;
}

inline std::string ReadFixture(const std::string& file) {
  std::ifstream in(FixturePath(file), std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline DigitalCurve LoadFixture(const std::string& file) {
  return LoadCurveBytes(ReadFixture(file));
}

// Distance from p to segment [a, b] via the clamped projection parameter.
inline double OracleSegmentDistance(double ax, double ay, double bx, double by,
                                    double px, double py) {
  const double dx = bx - ax;
  const double dy = by - ay;
  double t = ((px - ax) * dx + (py - ay) * dy) / (dx * dx + dy * dy);
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(px - (ax + t * dx), py - (ay + t * dy));
}

inline double OracleSegmentDistance(const Point& a, const Point& b,
                                    const Point& p) {
  return OracleSegmentDistance(a.x, a.y, b.x, b.y, p.x, p.y);
}

// Side-2 steps along each of the eight Freeman directions, starting at the
// origin: 16 points, direction changes at every even index.
inline DigitalCurve Octagon16() {
  std::vector<Point> pts;
  Point p{0, 0};
  const int dx[8] = {1, 1, 0, -1, -1, -1, 0, 1};
  const int dy[8] = {0, 1, 1, 1, 0, -1, -1, -1};
  for (int dir = 0; dir < 8; ++dir) {
    for (int s = 0; s < 2; ++s) {
      pts.push_back(p);
      p = {p.x + dx[dir], p.y + dy[dir]};
    }
  }
  return DigitalCurve::Build(pts, true);
}

// Ring of side 2 (8 points), corners at 0, 2, 4, 6.
inline DigitalCurve Square2() {
  return DigitalCurve::Build(
      {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}}, true);
}

// Radius-5 digital quarter circle from (5,0) to (0,5) closed through the
// origin along the axes. Arc interior: indices 1..6.
inline DigitalCurve QuarterDisc() {
  return DigitalCurve::Build({{5, 0}, {5, 1}, {5, 2}, {4, 3}, {3, 4}, {2, 5},
                              {1, 5}, {0, 5}, {0, 4}, {0, 3}, {0, 2}, {0, 1},
                              {0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}},
                             true);
}

// Contour of a random 8-connected blob grown on a small grid. Returns the
// traced closed curve (n may exceed max_n; callers filter).
inline DigitalCurve RandomBlobCurve(std::mt19937& rng, int grid = 9,
                                    int cells = 18) {
  BinaryImage img(grid, grid);
  std::uniform_int_distribution<int> dir(0, 3);
  int c = grid / 2;
  int r = grid / 2;
  img.set(c, r);
  const int dc[4] = {1, -1, 0, 0};
  const int dr[4] = {0, 0, 1, -1};
  for (int i = 0; i < cells * 3; ++i) {
    const int d = dir(rng);
    c = std::clamp(c + dc[d], 1, grid - 2);
    r = std::clamp(r + dr[d], 1, grid - 2);
    img.set(c, r);
  }
  return TraceContour(img);
}

struct ReplayStep {
  std::size_t removed_index;
  double sig;
};

// Algorithm replay with every significance recomputed from scratch each
// step and a linear scan for the minimum (first index wins ties).
inline std::vector<ReplayStep> BruteForceElimination(
    const DigitalCurve& curve, std::vector<std::size_t> current,
    std::size_t m) {
  std::vector<ReplayStep> steps;
  while (current.size() > m) {
    const DominantPointSet set(current, curve.size());
    std::size_t best = 0;
    double best_sig = 0.0;
    for (std::size_t k = 0; k < current.size(); ++k) {
      const double s = Significance(curve, set, k);
      if (k == 0 || s < best_sig) {
        best = k;
        best_sig = s;
      }
    }
    steps.push_back({current[best], best_sig});
    current.erase(current.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return steps;
}

// Significance from the oracle distance, summed over the open arc.
inline double OracleSignificance(const DigitalCurve& curve, std::size_t prev,
                                 std::size_t next) {
  const std::size_t n = curve.size();
  double sum = 0.0;
  for (std::size_t i = (prev + 1) % n; i != next; i = (i + 1) % n) {
    sum += OracleSegmentDistance(curve[prev], curve[next], curve[i]);
  }
  return sum;
}

}  // namespace dpapprox::testing

#endif  // DPAPPROX_TESTS_ORACLES_H_
