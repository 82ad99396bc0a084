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

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "dpapprox/error.h"
#include "dpapprox/significance.h"

namespace dpapprox {
namespace {

double SegmentDistance(const Point& a, const Point& b, const Point& p) {
  return a == b ? Distance(a, p) : PointContribution(a, b, p);
}

struct Split {
  std::size_t index = 0;
  double deviation = -1.0;  // < 0: chain has no interior points
};

Split FarthestInChain(const DigitalCurve& curve, std::size_t from,
                      std::size_t to) {
  const std::size_t n = curve.size();
  Split best;
  for (std::size_t i = (from + 1) % n; i != to; i = (i + 1) % n) {
    const double d = SegmentDistance(curve[from], curve[to], curve[i]);
    if (d > best.deviation) best = {i, d};
  }
  return best;
}

std::pair<std::size_t, std::size_t> Seeds(const DigitalCurve& curve) {
  const Point c = Centroid(curve);
  std::size_t a = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const double d = SquaredNorm(curve[i] - c);
    if (d > best) {
      best = d;
      a = i;
    }
  }
  std::size_t b = a;
  best = -1.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const double d = SquaredNorm(curve[i] - curve[a]);
    if (d > best) {
      best = d;
      b = i;
    }
  }
  return {std::min(a, b), std::max(a, b)};
}

void RequireClosed(const DigitalCurve& curve) {
  if (!curve.closed()) {
    throw Error(ErrorCode::kOpenCurve, "RDP baseline expects a closed curve");
  }
}

// Runs the recursion; `thresholds`, when given, receives the deviation of
// every chain that was split.
std::vector<std::size_t> RdpIndices(const DigitalCurve& curve, double epsilon,
                                    std::vector<double>* thresholds) {
  const auto [a, b] = Seeds(curve);
  std::vector<std::size_t> kept{a, b};
  std::vector<std::pair<std::size_t, std::size_t>> stack{{a, b}, {b, a}};

  const Split first = FarthestInChain(curve, a, b);
  const Split second = FarthestInChain(curve, b, a);
  const Split& forced = second.deviation > first.deviation ? second : first;
  const bool must_split = forced.deviation >= 0.0 &&
                          first.deviation <= epsilon &&
                          second.deviation <= epsilon;
  if (must_split) {
    // Only the chain holding the forced vertex needs further recursion.
    kept.push_back(forced.index);
    if (&forced == &first) {
      stack = {{a, forced.index}, {forced.index, b}};
    } else {
      stack = {{b, forced.index}, {forced.index, a}};
    }
  }

  while (!stack.empty()) {
    const auto [from, to] = stack.back();
    stack.pop_back();
    const Split s = FarthestInChain(curve, from, to);
    if (s.deviation < 0.0 || s.deviation <= epsilon) continue;
    if (thresholds != nullptr) thresholds->push_back(s.deviation);
    kept.push_back(s.index);
    stack.push_back({from, s.index});
    stack.push_back({s.index, to});
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return kept;
}

}  // namespace

DominantPointSet Rdp(const DigitalCurve& curve, double epsilon) {
  RequireClosed(curve);
  if (!(epsilon >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be >= 0");
  }
  return DominantPointSet(RdpIndices(curve, epsilon, nullptr), curve.size());
}

RdpCountResult RdpToCount(const DigitalCurve& curve, std::size_t m) {
  RequireClosed(curve);
  if (m < 3) {
    throw Error(ErrorCode::kTargetTooSmall,
                "target below minimum polygon size 3");
  }
  std::vector<double> candidates{0.0};
  RdpIndices(curve, 0.0, &candidates);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  // Vertex count is non-increasing in epsilon; find the largest candidate
  // whose count is still >= m.
  auto count_at = [&](double eps) {
    return RdpIndices(curve, eps, nullptr).size();
  };
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  if (count_at(candidates[lo]) <= m) {
    hi = lo;
  } else {
    while (lo < hi) {
      const std::size_t mid = (lo + hi + 1) / 2;
      if (count_at(candidates[mid]) >= m) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
  }
  const double eps = candidates[lo];
  return {.points = Rdp(curve, eps), .epsilon = eps};
}

}  // namespace dpapprox
