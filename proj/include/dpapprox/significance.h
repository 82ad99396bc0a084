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

#ifndef DPAPPROX_SIGNIFICANCE_H_
#define DPAPPROX_SIGNIFICANCE_H_

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "dpapprox/curve.h"
#include "dpapprox/point.h"

namespace dpapprox {

// Coordinate frame with the chord start at the origin and the chord along +x.
struct ChordFrame {
  Point origin;
  double angle = 0.0;  // chord direction, radians from +x
  double chord_length = 0.0;

  // Expresses `p` in the frame (translate, then rotate by -angle).
  Point Transform(const Point& p) const;
};

// Throws kDegenerateChord when the endpoints coincide.
ChordFrame MakeChordFrame(const Point& chord_start, const Point& chord_end);

// Where a point's projection falls relative to the chord. Both chord
// endpoints belong to kWithin.
enum class ProjectionRegion { kBefore, kWithin, kBeyond };

ProjectionRegion ClassifyProjection(double x_in_frame, double chord_length);

// Contribution of one curve point to the significance of the dominant point
// between `chord_start` and `chord_end`:
//   kBefore: distance to chord_start
//   kWithin: perpendicular distance to the chord's line
//   kBeyond: distance to chord_end
// i.e. the distance from `p` to the closed segment.
//
// Throws kDegenerateChord when the endpoints coincide.
double PointContribution(const Point& chord_start, const Point& chord_end,
                         const Point& p);

// Same as PointContribution, also reporting the region that was used.
std::pair<double, ProjectionRegion> ClassifiedContribution(
    const Point& chord_start, const Point& chord_end, const Point& p);

// Sum of PointContribution(curve[prev], curve[next], q) over the points q
// strictly between curve indices `prev` and `next` (forward, wrapping). If
// the two endpoints share coordinates (a contour revisiting a pixel), each
// point contributes its distance to that shared point.
double ArcSignificance(const DigitalCurve& curve, std::size_t prev,
                       std::size_t next);

// Significance of the k-th member of `dominant`, measured against the chord
// joining its two neighbours in the set (circularly).
//
// Throws kOpenCurve, kInvalidArgument (k out of range).
double Significance(const DigitalCurve& curve, const DominantPointSet& dominant,
                    std::size_t k);

// Significance value per live dominant point, ordered for minimum extraction.
// Ties are resolved towards the smaller curve index.
class SignificanceTable {
 public:
  void Set(std::size_t curve_index, double sig);
  void Erase(std::size_t curve_index);

  // (curve index, significance) of the minimum entry. Requires !empty().
  std::pair<std::size_t, double> Min() const;

  double at(std::size_t curve_index) const { return values_.at(curve_index); }
  bool contains(std::size_t curve_index) const {
    return values_.contains(curve_index);
  }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  // Entries in curve index order.
  const std::map<std::size_t, double>& values() const { return values_; }

 private:
  std::map<std::size_t, double> values_;
  std::set<std::pair<double, std::size_t>> order_;
};

}  // namespace dpapprox

#endif  // DPAPPROX_SIGNIFICANCE_H_
