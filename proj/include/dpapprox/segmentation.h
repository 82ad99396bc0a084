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

#ifndef DPAPPROX_SEGMENTATION_H_
#define DPAPPROX_SEGMENTATION_H_

#include <cstddef>
#include <vector>

#include "dpapprox/curve.h"

namespace dpapprox {

inline constexpr double kDefaultBreakTolerance = 1e-9;

enum class BreakSource { kChainCode, kDelta };

// Break points of a closed curve: the indices where the step direction
// changes. These seed the elimination as the initial dominant points.
struct InitialSegmentation {
  std::vector<std::size_t> indices;  // strictly increasing
  BreakSource source = BreakSource::kChainCode;
};

// Chain-code break points of a closed grid curve: i is reported iff the
// step into i differs from the step out of i (indices mod n).
//
// Throws kOpenCurve, kNotOnGrid.
InitialSegmentation InitialDominantPoints(const DigitalCurve& curve);

// Same rule for real-valued curves: i is reported iff the in and out step
// vectors differ by more than `tol` in some component. Rigid motions keep
// equal steps equal, so rotated grid curves segment like the originals.
//
// Throws kOpenCurve, kInvalidArgument (tol <= 0).
InitialSegmentation BreakPointsReal(const DigitalCurve& curve,
                                    double tol = kDefaultBreakTolerance);

// Chain-code breaks on grid curves, delta breaks otherwise.
InitialSegmentation Segment(const DigitalCurve& curve);

}  // namespace dpapprox

#endif  // DPAPPROX_SEGMENTATION_H_
