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

#ifndef DPAPPROX_CURVE_H_
#define DPAPPROX_CURVE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dpapprox/point.h"

namespace dpapprox {

// An ordered, validated sequence of boundary points.
//
// Coordinates are real. Whether the curve lies on the integer grid is
// detected at construction; grid curves must be 8-connected (every step,
// including the closing step of a closed curve, is a king move). Instances
// are immutable.
class DigitalCurve {
 public:
  // Validates `points` and builds a curve. Consecutive duplicates (and a
  // closing point equal to the first one, for closed curves) are collapsed
  // before validation.
  //
  // Throws Error with kTooFewPoints (empty input, or fewer than 3 points for
  // a closed curve) or kNonAdjacent (grid curve with a non-king-move step).
  static DigitalCurve Build(std::vector<Point> points, bool closed);

  std::span<const Point> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool closed() const { return closed_; }
  bool on_grid() const { return on_grid_; }

  const Point& operator[](std::size_t i) const { return points_[i]; }

  // Circular access: valid for any i, wraps modulo size().
  const Point& at_wrapped(std::ptrdiff_t i) const;

  friend bool operator==(const DigitalCurve&, const DigitalCurve&) = default;

 private:
  DigitalCurve(std::vector<Point> points, bool closed, bool on_grid)
      : points_(std::move(points)), closed_(closed), on_grid_(on_grid) {}

  std::vector<Point> points_;
  bool closed_ = true;
  bool on_grid_ = false;
};

inline DigitalCurve BuildCurve(std::vector<Point> points, bool closed) {
  return DigitalCurve::Build(std::move(points), closed);
}

// Freeman 8-direction code. 0 is +x and codes increase counterclockwise in
// 45 degree steps (y up): 1 = (+1,+1), 2 = (0,+1), ... 7 = (+1,-1).
struct ChainCode {
  std::vector<std::uint8_t> codes;

  friend bool operator==(const ChainCode&, const ChainCode&) = default;
};

// Unit king-move displacement for a Freeman code.
Point FreemanDelta(std::uint8_t code);

// Freeman code of a king-move displacement. Throws kInvalidArgument when the
// displacement is not one of the eight unit moves.
std::uint8_t FreemanCode(const Point& delta);

// One code per directed step; the closing step is included for closed
// curves. Throws kNotOnGrid when any coordinate is non-integer.
ChainCode ComputeChainCode(const DigitalCurve& curve);

// Replays a chain code from `start`. For a closed curve the final (closing)
// step is not replayed, so the result has exactly codes.size() points.
std::vector<Point> ReplayChainCode(const Point& start, const ChainCode& code,
                                   bool closed);

// Indices strictly between i and j, walking forward (wrapping past the last
// point on closed curves). Throws kOpenCurveWrap if j < i on an open curve and
// kInvalidArgument if i == j or either index is out of range.
std::vector<std::size_t> ArcIndices(const DigitalCurve& curve, std::size_t i,
                                    std::size_t j);

// The points at ArcIndices(curve, i, j).
std::vector<Point> ArcPoints(const DigitalCurve& curve, std::size_t i,
                             std::size_t j);

// Number of points strictly between i and j on a closed curve of n points,
// walking forward. Requires i != j.
inline std::size_t ArcLength(std::size_t n, std::size_t i, std::size_t j) {
  return (j + n - i) % n - 1;
}

// Vertex indices of an approximating polygon: a strictly increasing subset
// of the curve's indices with at least three members.
class DominantPointSet {
 public:
  // Throws kInvalidArgument when `indices` is not strictly increasing or has
  // an index >= curve_size, and kTooFewPoints when it has fewer than 3.
  DominantPointSet(std::vector<std::size_t> indices, std::size_t curve_size);

  std::span<const std::size_t> indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  std::size_t curve_size() const { return curve_size_; }
  std::size_t operator[](std::size_t k) const { return indices_[k]; }

  friend bool operator==(const DominantPointSet&,
                         const DominantPointSet&) = default;

 private:
  std::vector<std::size_t> indices_;
  std::size_t curve_size_;
};

// Arithmetic mean of the curve's points.
Point Centroid(const DigitalCurve& curve);

// Twice the signed area of the closed polygon through `points` (positive for
// counterclockwise order in the y-up frame). Vertices are taken relative to
// the first one, so the result depends only on displacements.
double SignedDoubleArea(std::span<const Point> points);

}  // namespace dpapprox

#endif  // DPAPPROX_CURVE_H_
