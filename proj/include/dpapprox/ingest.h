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

#ifndef DPAPPROX_INGEST_H_
#define DPAPPROX_INGEST_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dpapprox/curve.h"

namespace dpapprox {

// Parses the curve text format:
//
//   # comment (anywhere; runs to end of line)
//   closed            optional header, or "open"; default closed
//   x y               one point per line, "x,y" also accepted
//
// Closed curves are returned in clockwise order (y up): a counterclockwise
// input is reversed, keeping its first point in place.
//
// Throws ParseError (with the 1-based line) and the validation errors of
// DigitalCurve::Build.
DigitalCurve ParseCurveText(std::string_view text);

// Writes the curve text format. Coordinates use the shortest decimal form
// that reads back to the same double, so ParseCurveText(SerializeCurve(c))
// reproduces c exactly for any curve ParseCurveText produced.
std::string SerializeCurve(const DigitalCurve& curve);

// Reverses a closed counterclockwise curve (keeping point 0 first); returns
// other curves unchanged.
DigitalCurve NormalizeClockwise(const DigitalCurve& curve);

// Row-major bit grid, row 0 at the top (image convention).
class BinaryImage {
 public:
  BinaryImage(std::size_t width, std::size_t height);
  BinaryImage(std::size_t width, std::size_t height,
              std::vector<std::uint8_t> pixels);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }

  bool at(std::size_t col, std::size_t row) const {
    return pixels_[row * width_ + col] != 0;
  }
  void set(std::size_t col, std::size_t row, bool on = true) {
    pixels_[row * width_ + col] = on ? 1 : 0;
  }

  // Out-of-range coordinates read as background.
  bool foreground(std::ptrdiff_t col, std::ptrdiff_t row) const;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> pixels_;
};

// Reads PBM (P1, P4) and PGM (P2, P5). PBM 1 bits are foreground; PGM
// samples at or above half intensity (128 on an 8-bit scale) are foreground.
//
// Throws ParseError.
BinaryImage ParsePnm(std::string_view bytes);

// True when `bytes` starts with a PBM/PGM magic number.
bool LooksLikePnm(std::string_view bytes);

// Moore-neighbour boundary of the largest 8-connected foreground component
// (ties: the component whose first pixel in raster order comes first),
// starting at its top-left pixel and stopping on re-entering the start
// pixel from the starting direction. The result is flipped to y up
// (y = height - 1 - row) and returned clockwise.
//
// Throws kEmptyImage, kDegenerateComponent (boundary shorter than 3 points).
DigitalCurve TraceContour(const BinaryImage& image);

// Rotates every point about the curve centroid. Multiples of 90 degrees are
// applied exactly: the pivot is rounded to a 1/1024 grid so that each point
// offset, the swap/negation and the translation back are all exact, leaving
// every displacement between points an exact quarter-turn of the original.
DigitalCurve RotateCurve(const DigitalCurve& curve, double angle_deg);

// Loads either format from raw file contents.
DigitalCurve LoadCurveBytes(std::string_view bytes);

}  // namespace dpapprox

#endif  // DPAPPROX_INGEST_H_
