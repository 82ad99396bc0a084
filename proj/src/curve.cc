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

#include "dpapprox/curve.h"

#include <array>
#include <cmath>
#include <string>

#include "dpapprox/error.h"

namespace dpapprox {
namespace {

constexpr std::array<Point, 8> kFreemanDeltas = {{
    {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1},
}};

bool IsInteger(double v) { return std::isfinite(v) && std::floor(v) == v; }

std::string PointString(const Point& p) {
  return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

}  // namespace

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTooFewPoints: return "TooFewPoints";
    case ErrorCode::kNonAdjacent: return "NonAdjacent";
    case ErrorCode::kNotOnGrid: return "NotOnGrid";
    case ErrorCode::kOpenCurveWrap: return "OpenCurveWrap";
    case ErrorCode::kOpenCurve: return "OpenCurve";
    case ErrorCode::kDegenerateChord: return "DegenerateChord";
    case ErrorCode::kTargetTooSmall: return "TargetTooSmall";
    case ErrorCode::kTargetTooLarge: return "TargetTooLarge";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kEmptyImage: return "EmptyImage";
    case ErrorCode::kDegenerateComponent: return "DegenerateComponent";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

DigitalCurve DigitalCurve::Build(std::vector<Point> points, bool closed) {
  std::vector<Point> unique;
  unique.reserve(points.size());
  for (const Point& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "non-finite coordinate in curve");
    }
    if (unique.empty() || unique.back() != p) unique.push_back(p);
  }
  if (closed) {
    while (unique.size() > 1 && unique.back() == unique.front()) {
      unique.pop_back();
    }
  }
  if (unique.empty()) {
    throw Error(ErrorCode::kTooFewPoints, "curve has no points");
  }
  if (closed && unique.size() < 3) {
    throw Error(ErrorCode::kTooFewPoints,
                "closed curve needs at least 3 distinct points, got " +
                    std::to_string(unique.size()));
  }

  bool on_grid = true;
  for (const Point& p : unique) {
    if (!IsInteger(p.x) || !IsInteger(p.y)) {
      on_grid = false;
      break;
    }
  }
  if (on_grid) {
    const std::size_t n = unique.size();
    const std::size_t steps = closed ? n : n - 1;
    for (std::size_t i = 0; i < steps; ++i) {
      const Point& a = unique[i];
      const Point& b = unique[(i + 1) % n];
      if (ChessDistance(a, b) != 1.0) {
        throw Error(ErrorCode::kNonAdjacent,
                    "grid step " + std::to_string(i) + " from " +
                        PointString(a) + " to " + PointString(b) +
                        " is not 8-adjacent");
      }
    }
  }
  return DigitalCurve(std::move(unique), closed, on_grid);
}

const Point& DigitalCurve::at_wrapped(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(points_.size());
  return points_[static_cast<std::size_t>(((i % n) + n) % n)];
}

Point FreemanDelta(std::uint8_t code) { return kFreemanDeltas.at(code % 8); }

std::uint8_t FreemanCode(const Point& delta) {
  for (std::uint8_t c = 0; c < 8; ++c) {
    if (kFreemanDeltas[c] == delta) return c;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "not a king move: " + PointString(delta));
}

ChainCode ComputeChainCode(const DigitalCurve& curve) {
  if (!curve.on_grid()) {
    throw Error(ErrorCode::kNotOnGrid,
                "chain code requires integer coordinates");
  }
  const std::size_t n = curve.size();
  const std::size_t steps = curve.closed() ? n : n - 1;
  ChainCode code;
  code.codes.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    code.codes.push_back(FreemanCode(curve[(i + 1) % n] - curve[i]));
  }
  return code;
}

std::vector<Point> ReplayChainCode(const Point& start, const ChainCode& code,
                                   bool closed) {
  std::vector<Point> out{start};
  const std::size_t replay = closed && !code.codes.empty()
                                 ? code.codes.size() - 1
                                 : code.codes.size();
  out.reserve(replay + 1);
  for (std::size_t i = 0; i < replay; ++i) {
    out.push_back(out.back() + FreemanDelta(code.codes[i]));
  }
  return out;
}

std::vector<std::size_t> ArcIndices(const DigitalCurve& curve, std::size_t i,
                                    std::size_t j) {
  const std::size_t n = curve.size();
  if (i >= n || j >= n) {
    throw Error(ErrorCode::kInvalidArgument, "arc index out of range");
  }
  if (i == j) {
    throw Error(ErrorCode::kInvalidArgument, "arc endpoints must differ");
  }
  if (j < i && !curve.closed()) {
    throw Error(ErrorCode::kOpenCurveWrap,
                "arc would wrap past the end of an open curve");
  }
  std::vector<std::size_t> out;
  out.reserve((j + n - i) % n);
  for (std::size_t k = (i + 1) % n; k != j; k = (k + 1) % n) out.push_back(k);
  return out;
}

std::vector<Point> ArcPoints(const DigitalCurve& curve, std::size_t i,
                             std::size_t j) {
  std::vector<Point> out;
  for (std::size_t k : ArcIndices(curve, i, j)) out.push_back(curve[k]);
  return out;
}

DominantPointSet::DominantPointSet(std::vector<std::size_t> indices,
                                   std::size_t curve_size)
    : indices_(std::move(indices)), curve_size_(curve_size) {
  if (indices_.size() < 3) {
    throw Error(ErrorCode::kTooFewPoints,
                "a polygon needs at least 3 dominant points");
  }
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] >= curve_size_ || (k > 0 && indices_[k] <= indices_[k - 1])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "dominant point indices must be strictly increasing and "
                  "within the curve");
    }
  }
}

Point Centroid(const DigitalCurve& curve) {
  Point sum;
  for (const Point& p : curve.points()) sum += p;
  const double n = static_cast<double>(curve.size());
  return {sum.x / n, sum.y / n};
}

double SignedDoubleArea(std::span<const Point> points) {
  if (points.size() < 3) return 0.0;
  const Point& origin = points.front();
  double sum = 0.0;
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    sum += Cross(points[i] - origin, points[i + 1] - origin);
  }
  return sum;
}

}  // namespace dpapprox
