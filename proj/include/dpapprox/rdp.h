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

#ifndef DPAPPROX_RDP_H_
#define DPAPPROX_RDP_H_

#include <cstddef>

#include "dpapprox/curve.h"

namespace dpapprox {

// Ramer-Douglas-Peucker on a closed curve. The curve is first split into
// two chains at a pair of far-apart points (the point farthest from the
// centroid, then the point farthest from it); each chain is then split
// recursively at its point of maximum distance to the chord segment while
// that distance exceeds `epsilon`. When both chains are within tolerance of
// their chords, the worst point of the two chains is kept anyway so that the
// result is always a polygon.
//
// Throws kOpenCurve, kInvalidArgument (epsilon < 0 or NaN).
DominantPointSet Rdp(const DigitalCurve& curve, double epsilon);

struct RdpCountResult {
  DominantPointSet points;
  double epsilon = 0.0;
};

// Searches epsilon for a result with exactly `m` points. The vertex count
// can jump by more than one at a single threshold; in that case the
// smallest count above `m` is returned. Throws kTargetTooSmall (m < 3).
RdpCountResult RdpToCount(const DigitalCurve& curve, std::size_t m);

}  // namespace dpapprox

#endif  // DPAPPROX_RDP_H_
