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

#ifndef DPAPPROX_METRICS_H_
#define DPAPPROX_METRICS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "dpapprox/curve.h"

namespace dpapprox {

// Quality of one polygonal approximation.
//
//   cr  = n / m            compression ratio
//   ise = sum of d_k^2     integral square error
//   fom = cr / ise         figure of merit (+inf when ise == 0)
//   we  = ise / cr
//   we2 = ise / cr^2
//
// d_k is the distance from curve point k to the polygon edge spanning it.
// area, perimeter and compactness (= area / perimeter^2) describe the
// approximating polygon itself.
struct MetricsReport {
  std::size_t n = 0;
  std::size_t m = 0;
  double cr = 0.0;
  double ise = 0.0;
  double fom = 0.0;
  double we = 0.0;
  double we2 = 0.0;
  double max_dev = 0.0;
  double area = 0.0;
  double perimeter = 0.0;
  double compactness = 0.0;

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

// One deviation per curve point, measured against the edge joining the two
// dominant points that enclose it. Dominant points get 0.
std::vector<double> PerPointDeviations(const DigitalCurve& curve,
                                       const DominantPointSet& dominant);

MetricsReport ComputeMetrics(const DigitalCurve& curve,
                             const DominantPointSet& dominant);

// Fills the ratio fields (cr, fom, we, we2) from n, m and ise.
void FillRatios(MetricsReport& report);

struct RotationRow {
  double angle_deg = 0.0;
  double max_dev = 0.0;
  double ise = 0.0;
  double area = 0.0;
  double perimeter = 0.0;
  double compactness = 0.0;

  friend bool operator==(const RotationRow&, const RotationRow&) = default;
};

// For each angle: rotate the curve about its centroid, segment it with
// delta break points, eliminate down to m points and measure the result.
std::vector<RotationRow> RotationReport(const DigitalCurve& curve,
                                        std::span<const double> angles_deg,
                                        std::size_t m);

}  // namespace dpapprox

#endif  // DPAPPROX_METRICS_H_
