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

#include <algorithm>
#include <limits>

#include "dpapprox/significance.h"

namespace dpapprox {
namespace {

double EdgeDistance(const Point& a, const Point& b, const Point& p) {
  return a == b ? Distance(a, p) : PointContribution(a, b, p);
}

}  // namespace

std::vector<double> PerPointDeviations(const DigitalCurve& curve,
                                       const DominantPointSet& dominant) {
  const std::size_t n = curve.size();
  const std::size_t m = dominant.size();
  std::vector<double> dev(n, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t from = dominant[k];
    const std::size_t to = dominant[(k + 1) % m];
    for (std::size_t i = (from + 1) % n; i != to; i = (i + 1) % n) {
      dev[i] = EdgeDistance(curve[from], curve[to], curve[i]);
    }
  }
  return dev;
}

void FillRatios(MetricsReport& r) {
  r.cr = static_cast<double>(r.n) / static_cast<double>(r.m);
  r.fom = r.ise == 0.0 ? std::numeric_limits<double>::infinity() : r.cr / r.ise;
  r.we = r.ise / r.cr;
  r.we2 = r.ise / (r.cr * r.cr);
}

MetricsReport ComputeMetrics(const DigitalCurve& curve,
                             const DominantPointSet& dominant) {
  MetricsReport r;
  r.n = curve.size();
  r.m = dominant.size();
  for (double d : PerPointDeviations(curve, dominant)) {
    r.ise += d * d;
    r.max_dev = std::max(r.max_dev, d);
  }
  FillRatios(r);

  std::vector<Point> polygon;
  polygon.reserve(r.m);
  for (std::size_t idx : dominant.indices()) polygon.push_back(curve[idx]);
  r.area = std::fabs(SignedDoubleArea(polygon)) / 2.0;
  for (std::size_t k = 0; k < r.m; ++k) {
    r.perimeter += Distance(polygon[k], polygon[(k + 1) % r.m]);
  }
  r.compactness = r.perimeter > 0.0 ? r.area / (r.perimeter * r.perimeter) : 0.0;
  return r;
}

}  // namespace dpapprox
