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

#ifndef DPAPPROX_POINT_H_
#define DPAPPROX_POINT_H_

#include <cmath>

namespace dpapprox {

// A planar point or displacement. The library uses a y-up frame throughout.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;

  Point& operator+=(const Point& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Point& operator-=(const Point& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(double s, const Point& p) { return {s * p.x, s * p.y}; }
  friend Point operator-(const Point& p) { return {-p.x, -p.y}; }
};

inline double Dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

// z component of the 3D cross product.
inline double Cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

inline double SquaredNorm(const Point& v) { return v.x * v.x + v.y * v.y; }

// sqrt(x*x + y*y) rather than std::hypot: the sum is symmetric in its terms,
// so quarter-turned displacements produce bit-identical lengths.
inline double Norm(const Point& v) { return std::sqrt(SquaredNorm(v)); }

inline double Distance(const Point& a, const Point& b) { return Norm(b - a); }

// Chebyshev (king-move) distance.
inline double ChessDistance(const Point& a, const Point& b) {
  return std::fmax(std::fabs(a.x - b.x), std::fabs(a.y - b.y));
}

}  // namespace dpapprox

#endif  // DPAPPROX_POINT_H_
