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

#include "dpapprox/segmentation.h"

#include <cmath>

#include "dpapprox/error.h"

namespace dpapprox {
namespace {

void RequireClosed(const DigitalCurve& curve) {
  if (!curve.closed()) {
    throw Error(ErrorCode::kOpenCurve,
                "segmentation is only defined for closed curves");
  }
}

}  // namespace

InitialSegmentation InitialDominantPoints(const DigitalCurve& curve) {
  RequireClosed(curve);
  const ChainCode chain = ComputeChainCode(curve);
  const std::size_t n = chain.codes.size();
  InitialSegmentation out{.indices = {}, .source = BreakSource::kChainCode};
  for (std::size_t i = 0; i < n; ++i) {
    // codes[i] is the step out of i, codes[i-1] the step into it.
    if (chain.codes[(i + n - 1) % n] != chain.codes[i]) {
      out.indices.push_back(i);
    }
  }
  return out;
}

InitialSegmentation BreakPointsReal(const DigitalCurve& curve, double tol) {
  RequireClosed(curve);
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "break tolerance must be > 0");
  }
  const std::size_t n = curve.size();
  InitialSegmentation out{.indices = {}, .source = BreakSource::kDelta};
  for (std::size_t i = 0; i < n; ++i) {
    const Point in = curve[i] - curve[(i + n - 1) % n];
    const Point step_out = curve[(i + 1) % n] - curve[i];
    const Point diff = step_out - in;
    if (std::fabs(diff.x) > tol || std::fabs(diff.y) > tol) {
      out.indices.push_back(i);
    }
  }
  return out;
}

InitialSegmentation Segment(const DigitalCurve& curve) {
  return curve.on_grid() ? InitialDominantPoints(curve)
                         : BreakPointsReal(curve);
}

}  // namespace dpapprox
