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

#include "dpapprox/approximator.h"
#include "dpapprox/ingest.h"
#include "dpapprox/metrics.h"
#include "dpapprox/segmentation.h"

namespace dpapprox {

std::vector<RotationRow> RotationReport(const DigitalCurve& curve,
                                        std::span<const double> angles_deg,
                                        std::size_t m) {
  std::vector<RotationRow> rows;
  rows.reserve(angles_deg.size());
  for (double angle : angles_deg) {
    const DigitalCurve rotated = RotateCurve(curve, angle);
    const Approximation approx =
        EliminateToCount(rotated, BreakPointsReal(rotated), m);
    const MetricsReport r = ComputeMetrics(rotated, approx.result);
    rows.push_back({.angle_deg = angle,
                    .max_dev = r.max_dev,
                    .ise = r.ise,
                    .area = r.area,
                    .perimeter = r.perimeter,
                    .compactness = r.compactness});
  }
  return rows;
}

}  // namespace dpapprox
