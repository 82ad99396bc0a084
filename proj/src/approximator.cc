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

#include <cmath>
#include <string>

#include "dpapprox/error.h"
#include "dpapprox/significance.h"

namespace dpapprox {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Doubly linked ring over the initial break points plus their significance
// table. Positions index `vertices_`; the table is keyed by curve index.
class Eliminator {
 public:
  Eliminator(const DigitalCurve& curve, std::vector<std::size_t> vertices)
      : curve_(curve),
        vertices_(std::move(vertices)),
        prev_(vertices_.size()),
        next_(vertices_.size()),
        position_(curve.size(), kNone),
        alive_(vertices_.size()) {
    const std::size_t count = vertices_.size();
    for (std::size_t p = 0; p < count; ++p) {
      prev_[p] = (p + count - 1) % count;
      next_[p] = (p + 1) % count;
      position_[vertices_[p]] = p;
    }
    for (std::size_t p = 0; p < count; ++p) Rescore(p);
  }

  std::size_t size() const { return alive_; }

  std::pair<std::size_t, double> Peek() const { return table_.Min(); }

  void Remove(std::size_t curve_index) {
    const std::size_t p = position_[curve_index];
    const std::size_t before = prev_[p];
    const std::size_t after = next_[p];
    next_[before] = after;
    prev_[after] = before;
    position_[curve_index] = kNone;
    table_.Erase(curve_index);
    --alive_;
    Rescore(before);
    Rescore(after);
  }

  // Current vertices in curve order, optionally leaving one out.
  DominantPointSet Current(std::size_t skip = kNone) const {
    std::vector<std::size_t> out;
    out.reserve(alive_);
    for (std::size_t idx : vertices_) {
      if (position_[idx] != kNone && idx != skip) out.push_back(idx);
    }
    return DominantPointSet(std::move(out), curve_.size());
  }

 private:
  void Rescore(std::size_t p) {
    table_.Set(vertices_[p], ArcSignificance(curve_, vertices_[prev_[p]],
                                             vertices_[next_[p]]));
  }

  const DigitalCurve& curve_;
  std::vector<std::size_t> vertices_;
  std::vector<std::size_t> prev_;
  std::vector<std::size_t> next_;
  std::vector<std::size_t> position_;
  std::size_t alive_;
  SignificanceTable table_;
};

void RequireClosed(const DigitalCurve& curve) {
  if (!curve.closed()) {
    throw Error(ErrorCode::kOpenCurve,
                "polygonal approximation requires a closed curve");
  }
}

}  // namespace

Approximation EliminateToCount(const DigitalCurve& curve, std::size_t m) {
  RequireClosed(curve);
  if (m < kMinPolygonSize) {
    throw Error(ErrorCode::kTargetTooSmall,
                "target below minimum polygon size 3");
  }
  return EliminateToCount(curve, Segment(curve), m);
}

Approximation EliminateToCount(const DigitalCurve& curve,
                               const InitialSegmentation& segmentation,
                               std::size_t m) {
  RequireClosed(curve);
  if (m < kMinPolygonSize) {
    throw Error(ErrorCode::kTargetTooSmall,
                "target below minimum polygon size 3");
  }
  const std::size_t initial = segmentation.indices.size();
  if (m > initial) {
    throw Error(ErrorCode::kTargetTooLarge,
                "target " + std::to_string(m) + " exceeds the " +
                    std::to_string(initial) + " initial dominant points");
  }
  Eliminator engine(curve, segmentation.indices);
  std::vector<EliminationStep> trace;
  trace.reserve(initial - m);
  while (engine.size() > m) {
    const auto [index, sig] = engine.Peek();
    engine.Remove(index);
    trace.push_back({.removed_index = index,
                     .sig_at_removal = sig,
                     .metrics_after = ComputeMetrics(curve, engine.Current())});
  }
  return {.curve = curve,
          .initial = segmentation.indices,
          .result = engine.Current(),
          .trace = std::move(trace)};
}

Approximation EliminateToError(const DigitalCurve& curve, double max_ise) {
  RequireClosed(curve);
  if (!(max_ise >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "max ISE must be >= 0");
  }
  const InitialSegmentation segmentation = Segment(curve);
  if (segmentation.indices.size() < kMinPolygonSize) {
    throw Error(ErrorCode::kTooFewPoints,
                "curve has fewer than 3 break points");
  }
  Eliminator engine(curve, segmentation.indices);
  std::vector<EliminationStep> trace;
  while (engine.size() > kMinPolygonSize) {
    const auto [index, sig] = engine.Peek();
    MetricsReport after = ComputeMetrics(curve, engine.Current(index));
    if (after.ise > max_ise) break;
    engine.Remove(index);
    trace.push_back(
        {.removed_index = index, .sig_at_removal = sig, .metrics_after = after});
  }
  return {.curve = curve,
          .initial = segmentation.indices,
          .result = engine.Current(),
          .trace = std::move(trace)};
}

}  // namespace dpapprox
