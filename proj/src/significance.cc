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

#include "dpapprox/significance.h"

#include <cmath>

#include "dpapprox/error.h"

namespace dpapprox {
namespace {

void RequireChord(const Point& a, const Point& b) {
  if (a == b) {
    throw Error(ErrorCode::kDegenerateChord, "chord endpoints coincide");
  }
}

}  // namespace

Point ChordFrame::Transform(const Point& p) const {
  const Point v = p - origin;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x + s * v.y, -s * v.x + c * v.y};
}

ChordFrame MakeChordFrame(const Point& chord_start, const Point& chord_end) {
  RequireChord(chord_start, chord_end);
  const Point d = chord_end - chord_start;
  return {.origin = chord_start,
          .angle = std::atan2(d.y, d.x),
          .chord_length = Norm(d)};
}

ProjectionRegion ClassifyProjection(double x_in_frame, double chord_length) {
  if (x_in_frame < 0.0) return ProjectionRegion::kBefore;
  if (x_in_frame > chord_length) return ProjectionRegion::kBeyond;
  return ProjectionRegion::kWithin;
}

std::pair<double, ProjectionRegion> ClassifiedContribution(
    const Point& chord_start, const Point& chord_end, const Point& p) {
  RequireChord(chord_start, chord_end);
  const Point chord = chord_end - chord_start;
  const Point v = p - chord_start;
  // x' * |chord| compared against |chord|^2, so the region test needs no
  // division or square root.
  const double along = Dot(v, chord);
  const double length_sq = SquaredNorm(chord);
  if (along < 0.0) return {Norm(v), ProjectionRegion::kBefore};
  if (along > length_sq) {
    return {Distance(chord_end, p), ProjectionRegion::kBeyond};
  }
  // |y'| = |chord x v| / |chord|
  return {std::fabs(Cross(chord, v)) / std::sqrt(length_sq),
          ProjectionRegion::kWithin};
}

double PointContribution(const Point& chord_start, const Point& chord_end,
                         const Point& p) {
  return ClassifiedContribution(chord_start, chord_end, p).first;
}

double ArcSignificance(const DigitalCurve& curve, std::size_t prev,
                       std::size_t next) {
  const std::size_t n = curve.size();
  const Point& a = curve[prev];
  const Point& b = curve[next];
  double sum = 0.0;
  if (a == b) {
    // A contour that revisits a pixel can put two dominant points on the
    // same coordinates; the segment is then a single point.
    for (std::size_t k = (prev + 1) % n; k != next; k = (k + 1) % n) {
      sum += Distance(a, curve[k]);
    }
    return sum;
  }
  for (std::size_t k = (prev + 1) % n; k != next; k = (k + 1) % n) {
    sum += PointContribution(a, b, curve[k]);
  }
  return sum;
}

double Significance(const DigitalCurve& curve, const DominantPointSet& dominant,
                    std::size_t k) {
  if (!curve.closed()) {
    throw Error(ErrorCode::kOpenCurve,
                "significance is only defined on closed curves");
  }
  const std::size_t m = dominant.size();
  if (k >= m) {
    throw Error(ErrorCode::kInvalidArgument, "dominant point out of range");
  }
  return ArcSignificance(curve, dominant[(k + m - 1) % m],
                         dominant[(k + 1) % m]);
}

void SignificanceTable::Set(std::size_t curve_index, double sig) {
  auto [it, inserted] = values_.try_emplace(curve_index, sig);
  if (!inserted) {
    order_.erase({it->second, curve_index});
    it->second = sig;
  }
  order_.insert({sig, curve_index});
}

void SignificanceTable::Erase(std::size_t curve_index) {
  auto it = values_.find(curve_index);
  if (it == values_.end()) return;
  order_.erase({it->second, curve_index});
  values_.erase(it);
}

std::pair<std::size_t, double> SignificanceTable::Min() const {
  const auto& [sig, index] = *order_.begin();
  return {index, sig};
}

}  // namespace dpapprox
