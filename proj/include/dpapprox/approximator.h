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

#ifndef DPAPPROX_APPROXIMATOR_H_
#define DPAPPROX_APPROXIMATOR_H_

#include <cstddef>
#include <vector>

#include "dpapprox/curve.h"
#include "dpapprox/metrics.h"
#include "dpapprox/segmentation.h"

namespace dpapprox {

inline constexpr std::size_t kMinPolygonSize = 3;

struct EliminationStep {
  std::size_t removed_index = 0;  // curve index
  double sig_at_removal = 0.0;
  MetricsReport metrics_after;

  friend bool operator==(const EliminationStep&,
                         const EliminationStep&) = default;
};

struct Approximation {
  DigitalCurve curve;
  std::vector<std::size_t> initial;  // break points the run started from
  DominantPointSet result;
  std::vector<EliminationStep> trace;
};

// Removes the least significant dominant point, one at a time, until `m`
// remain. Ties go to the smallest curve index. After each removal only the
// two neighbours of the removed point are re-scored.
//
// Throws kOpenCurve, kTargetTooSmall (m < 3), kTargetTooLarge (m above the
// number of break points).
Approximation EliminateToCount(const DigitalCurve& curve, std::size_t m);

// As above, starting from a given segmentation instead of Segment(curve).
Approximation EliminateToCount(const DigitalCurve& curve,
                               const InitialSegmentation& segmentation,
                               std::size_t m);

// Eliminates while the next removal keeps ISE <= max_ise, never going below
// three points. Throws kOpenCurve, kInvalidArgument (max_ise < 0 or NaN),
// kTooFewPoints (fewer than three break points).
Approximation EliminateToError(const DigitalCurve& curve, double max_ise);

}  // namespace dpapprox

#endif  // DPAPPROX_APPROXIMATOR_H_
