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

#include "dpapprox/ingest.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <deque>
#include <numbers>

#include "dpapprox/error.h"

namespace dpapprox {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\v\f");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\v\f");
  return s.substr(first, last - first + 1);
}

bool ParseDouble(std::string_view token, double& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  if (token.empty()) return false;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size() &&
         std::isfinite(out);
}

Point ParsePointLine(std::string_view line, std::size_t line_no) {
  std::string_view a, b;
  if (const auto comma = line.find(','); comma != std::string_view::npos) {
    a = Trim(line.substr(0, comma));
    b = Trim(line.substr(comma + 1));
  } else {
    const auto space = line.find_first_of(" \t");
    if (space == std::string_view::npos) {
      throw ParseError(line_no, "expected two coordinates");
    }
    a = line.substr(0, space);
    b = Trim(line.substr(space));
  }
  Point p;
  if (!ParseDouble(a, p.x) || !ParseDouble(b, p.y)) {
    throw ParseError(line_no, "malformed coordinate pair '" +
                                  std::string(line) + "'");
  }
  return p;
}

void AppendNumber(std::string& out, double v) {
  std::array<char, 32> buf;
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  out.append(buf.data(), ptr);
}

// Screen-space neighbour offsets, clockwise (row axis points down) from west.
constexpr std::array<std::array<int, 2>, 8> kMoore = {{
    {-1, 0}, {-1, -1}, {0, -1}, {1, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 1},
}};

int MooreDirection(std::ptrdiff_t dc, std::ptrdiff_t dr) {
  for (int d = 0; d < 8; ++d) {
    if (kMoore[d][0] == dc && kMoore[d][1] == dr) return d;
  }
  return -1;
}

struct Component {
  std::size_t label = 0;
  std::size_t size = 0;
  std::size_t first_col = 0;
  std::size_t first_row = 0;
};

// 8-connected labelling; labels start at 1. Returns the largest component
// (earliest in raster order on ties).
Component LargestComponent(const BinaryImage& image,
                           std::vector<std::size_t>& labels) {
  const std::size_t w = image.width();
  const std::size_t h = image.height();
  labels.assign(w * h, 0);
  Component best;
  std::size_t next_label = 1;
  std::deque<std::size_t> queue;
  for (std::size_t row = 0; row < h; ++row) {
    for (std::size_t col = 0; col < w; ++col) {
      if (!image.at(col, row) || labels[row * w + col] != 0) continue;
      Component comp{.label = next_label++, .size = 0, .first_col = col,
                     .first_row = row};
      labels[row * w + col] = comp.label;
      queue.push_back(row * w + col);
      while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        ++comp.size;
        const auto cr = static_cast<std::ptrdiff_t>(cur / w);
        const auto cc = static_cast<std::ptrdiff_t>(cur % w);
        for (const auto& d : kMoore) {
          const std::ptrdiff_t nc = cc + d[0];
          const std::ptrdiff_t nr = cr + d[1];
          if (!image.foreground(nc, nr)) continue;
          const std::size_t ni = static_cast<std::size_t>(nr) * w +
                                 static_cast<std::size_t>(nc);
          if (labels[ni] != 0) continue;
          labels[ni] = comp.label;
          queue.push_back(ni);
        }
      }
      if (comp.size > best.size) best = comp;
    }
  }
  return best;
}

// Tokenizer for PNM headers: whitespace separated, '#' comments to EOL.
class PnmReader {
 public:
  explicit PnmReader(std::string_view bytes) : bytes_(bytes) {}

  std::string_view Token() {
    SkipSpaceAndComments();
    const std::size_t start = pos_;
    while (pos_ < bytes_.size() && !IsSpace(bytes_[pos_]) && bytes_[pos_] != '#') {
      ++pos_;
    }
    if (start == pos_) throw ParseError(Line(), "unexpected end of image");
    return bytes_.substr(start, pos_ - start);
  }

  std::size_t Number() {
    const std::string_view tok = Token();
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError(Line(), "expected an unsigned integer, got '" +
                                   std::string(tok) + "'");
    }
    return v;
  }

  // Next '0' or '1' of a P1 raster; digits may be packed without spaces.
  bool Bit() {
    SkipSpaceAndComments();
    if (pos_ >= bytes_.size()) throw ParseError(Line(), "truncated P1 raster");
    const char c = bytes_[pos_++];
    if (c != '0' && c != '1') {
      throw ParseError(Line(), std::string("invalid P1 pixel '") + c + "'");
    }
    return c == '1';
  }

  // Binary rasters start after exactly one whitespace byte.
  std::string_view Raster(std::size_t size) {
    if (pos_ >= bytes_.size() || !IsSpace(bytes_[pos_])) {
      throw ParseError(Line(), "missing whitespace before binary raster");
    }
    ++pos_;
    if (bytes_.size() - pos_ < size) {
      throw ParseError(Line(), "truncated binary raster");
    }
    return bytes_.substr(pos_, size);
  }

 private:
  static bool IsSpace(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
  }

  void SkipSpaceAndComments() {
    while (pos_ < bytes_.size()) {
      if (IsSpace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::size_t Line() const {
    return 1 + static_cast<std::size_t>(
                   std::count(bytes_.begin(), bytes_.begin() + pos_, '\n'));
  }

  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

DigitalCurve NormalizeClockwise(const DigitalCurve& curve) {
  if (!curve.closed() || SignedDoubleArea(curve.points()) <= 0.0) return curve;
  std::vector<Point> reversed(curve.points().begin(), curve.points().end());
  std::reverse(reversed.begin() + 1, reversed.end());
  return DigitalCurve::Build(std::move(reversed), true);
}

DigitalCurve ParseCurveText(std::string_view text) {
  bool closed = true;
  bool seen_header_or_point = false;
  std::vector<Point> points;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    if (!seen_header_or_point && (line == "closed" || line == "open")) {
      closed = line == "closed";
      seen_header_or_point = true;
      continue;
    }
    seen_header_or_point = true;
    points.push_back(ParsePointLine(line, line_no));
  }
  if (points.empty()) {
    throw Error(ErrorCode::kTooFewPoints, "curve file contains no points");
  }
  return NormalizeClockwise(DigitalCurve::Build(std::move(points), closed));
}

std::string SerializeCurve(const DigitalCurve& curve) {
  std::string out = curve.closed() ? "closed\n" : "open\n";
  for (const Point& p : curve.points()) {
    AppendNumber(out, p.x);
    out.push_back(' ');
    AppendNumber(out, p.y);
    out.push_back('\n');
  }
  return out;
}

BinaryImage::BinaryImage(std::size_t width, std::size_t height)
    : width_(width), height_(height), pixels_(width * height, 0) {}

BinaryImage::BinaryImage(std::size_t width, std::size_t height,
                         std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (pixels_.size() != width_ * height_) {
    throw Error(ErrorCode::kInvalidArgument,
                "pixel count does not match image dimensions");
  }
}

bool BinaryImage::foreground(std::ptrdiff_t col, std::ptrdiff_t row) const {
  if (col < 0 || row < 0 || static_cast<std::size_t>(col) >= width_ ||
      static_cast<std::size_t>(row) >= height_) {
    return false;
  }
  return at(static_cast<std::size_t>(col), static_cast<std::size_t>(row));
}

bool LooksLikePnm(std::string_view bytes) {
  return bytes.size() >= 2 && bytes[0] == 'P' &&
         (bytes[1] == '1' || bytes[1] == '2' || bytes[1] == '4' ||
          bytes[1] == '5');
}

BinaryImage ParsePnm(std::string_view bytes) {
  if (!LooksLikePnm(bytes)) {
    throw ParseError(1, "not a P1/P2/P4/P5 image");
  }
  const char kind = bytes[1];
  PnmReader reader(bytes.substr(2));
  const std::size_t width = reader.Number();
  const std::size_t height = reader.Number();
  if (width == 0 || height == 0) throw ParseError(1, "image has zero size");
  std::size_t maxval = 1;
  if (kind == '2' || kind == '5') {
    maxval = reader.Number();
    if (maxval == 0 || maxval > 65535) throw ParseError(1, "invalid maxval");
  }
  // sample / maxval >= 128 / 255
  auto gray_on = [maxval](std::size_t v) { return v * 255 >= 128 * maxval; };

  BinaryImage image(width, height);
  switch (kind) {
    case '1':
      for (std::size_t r = 0; r < height; ++r)
        for (std::size_t c = 0; c < width; ++c) image.set(c, r, reader.Bit());
      break;
    case '4': {
      const std::size_t stride = (width + 7) / 8;
      const std::string_view raster = reader.Raster(stride * height);
      for (std::size_t r = 0; r < height; ++r) {
        for (std::size_t c = 0; c < width; ++c) {
          const auto byte = static_cast<unsigned char>(raster[r * stride + c / 8]);
          image.set(c, r, (byte >> (7 - c % 8)) & 1u);
        }
      }
      break;
    }
    case '2':
      for (std::size_t r = 0; r < height; ++r)
        for (std::size_t c = 0; c < width; ++c)
          image.set(c, r, gray_on(reader.Number()));
      break;
    case '5': {
      const std::size_t bpp = maxval > 255 ? 2 : 1;
      const std::string_view raster = reader.Raster(width * height * bpp);
      for (std::size_t i = 0; i < width * height; ++i) {
        std::size_t v = static_cast<unsigned char>(raster[i * bpp]);
        if (bpp == 2) v = (v << 8) | static_cast<unsigned char>(raster[i * bpp + 1]);
        image.set(i % width, i / width, gray_on(v));
      }
      break;
    }
  }
  return image;
}

DigitalCurve TraceContour(const BinaryImage& image) {
  std::vector<std::size_t> labels;
  const Component comp = LargestComponent(image, labels);
  if (comp.size == 0) {
    throw Error(ErrorCode::kEmptyImage, "image has no foreground pixels");
  }
  const std::size_t w = image.width();
  auto inside = [&](std::ptrdiff_t c, std::ptrdiff_t r) {
    return image.foreground(c, r) &&
           labels[static_cast<std::size_t>(r) * w + static_cast<std::size_t>(c)] ==
               comp.label;
  };

  const auto start_c = static_cast<std::ptrdiff_t>(comp.first_col);
  const auto start_r = static_cast<std::ptrdiff_t>(comp.first_row);
  // The start is first in raster order, so its west neighbour is outside.
  constexpr int kStartBacktrack = 0;

  std::vector<std::array<std::ptrdiff_t, 2>> path{{start_c, start_r}};
  std::ptrdiff_t c = start_c;
  std::ptrdiff_t r = start_r;
  int backtrack = kStartBacktrack;
  int first_move = -1;
  // Each boundary pixel is entered at most four times.
  const std::size_t max_steps = 4 * comp.size + 16;
  for (std::size_t step = 0;; ++step) {
    int found = -1;
    for (int k = 1; k <= 8; ++k) {
      const int d = (backtrack + k) % 8;
      if (inside(c + kMoore[d][0], r + kMoore[d][1])) {
        found = d;
        break;
      }
    }
    if (found < 0) break;  // isolated pixel
    // Done once the walk is about to repeat its first edge.
    if (step == 0) {
      first_move = found;
    } else if (c == start_c && r == start_r && found == first_move) {
      break;
    }
    if (step >= max_steps) {
      throw std::logic_error("contour trace did not close");
    }
    // The last background cell examined becomes the new backtrack.
    const int previous = (found + 7) % 8;
    const std::ptrdiff_t bg_c = c + kMoore[previous][0];
    const std::ptrdiff_t bg_r = r + kMoore[previous][1];
    c += kMoore[found][0];
    r += kMoore[found][1];
    backtrack = MooreDirection(bg_c - c, bg_r - r);
    path.push_back({c, r});
  }

  const auto height = static_cast<double>(image.height());
  std::vector<Point> points;
  points.reserve(path.size());
  for (const auto& [pc, pr] : path) {
    points.push_back({static_cast<double>(pc), height - 1.0 - static_cast<double>(pr)});
  }
  try {
    return NormalizeClockwise(DigitalCurve::Build(std::move(points), true));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kTooFewPoints) throw;
    throw Error(ErrorCode::kDegenerateComponent,
                "largest component has no boundary of 3 or more points");
  }
}

DigitalCurve RotateCurve(const DigitalCurve& curve, double angle_deg) {
  if (!std::isfinite(angle_deg)) {
    throw Error(ErrorCode::kInvalidArgument, "rotation angle must be finite");
  }
  double turn = std::fmod(angle_deg, 360.0);
  if (turn < 0.0) turn += 360.0;
  if (turn == 0.0) return curve;

  const Point centroid = Centroid(curve);
  std::vector<Point> rotated;
  rotated.reserve(curve.size());
  if (std::fmod(turn, 90.0) == 0.0) {
    constexpr double kGrid = 1024.0;
    const Point pivot{std::round(centroid.x * kGrid) / kGrid,
                      std::round(centroid.y * kGrid) / kGrid};
    const int quarter = static_cast<int>(turn / 90.0);
    for (const Point& p : curve.points()) {
      const Point v = p - pivot;
      Point q;
      switch (quarter) {
        case 1: q = {-v.y, v.x}; break;
        case 2: q = {-v.x, -v.y}; break;
        default: q = {v.y, -v.x}; break;
      }
      rotated.push_back(q + pivot);
    }
  } else {
    const double rad = angle_deg * std::numbers::pi / 180.0;
    const double cs = std::cos(rad);
    const double sn = std::sin(rad);
    for (const Point& p : curve.points()) {
      const Point v = p - centroid;
      rotated.push_back(
          Point{cs * v.x - sn * v.y, sn * v.x + cs * v.y} + centroid);
    }
  }
  return DigitalCurve::Build(std::move(rotated), curve.closed());
}

DigitalCurve LoadCurveBytes(std::string_view bytes) {
  if (LooksLikePnm(bytes)) return TraceContour(ParsePnm(bytes));
  return ParseCurveText(bytes);
}

}  // namespace dpapprox
