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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "CLI11.hpp"
#include "json.hpp"
#include "dpapprox/error.h"
#include "dpapprox/ingest.h"
#include "dpapprox/segmentation.h"

namespace dpapprox::cli {
namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

// Rounded through FormatReal so JSON and CSV carry the same digits.
Json RealJson(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::stod(FormatReal(v));
}

Json MetricsJson(const MetricsReport& r) {
  Json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["cr"] = RealJson(r.cr);
  j["ise"] = RealJson(r.ise);
  j["fom"] = RealJson(r.fom);
  j["we"] = RealJson(r.we);
  j["we2"] = RealJson(r.we2);
  j["max_dev"] = RealJson(r.max_dev);
  j["area"] = RealJson(r.area);
  j["perimeter"] = RealJson(r.perimeter);
  j["compactness"] = RealJson(r.compactness);
  return j;
}

Json VerticesJson(const DigitalCurve& curve, const DominantPointSet& d) {
  Json out = Json::array();
  for (std::size_t idx : d.indices()) {
    out.push_back({{"index", idx},
                   {"x", RealJson(curve[idx].x)},
                   {"y", RealJson(curve[idx].y)}});
  }
  return out;
}

std::string CsvReal(double v) { return std::isfinite(v) ? FormatReal(v) : ""; }

void AppendMetricsRow(std::string& out, std::string_view method,
                      const MetricsReport& r) {
  out += std::string(method) + "," + std::to_string(r.n) + "," +
         std::to_string(r.m) + "," + CsvReal(r.cr) + "," + CsvReal(r.ise) +
         "," + CsvReal(r.fom) + "," + CsvReal(r.we) + "," + CsvReal(r.we2) +
         "," + CsvReal(r.max_dev) + "," + CsvReal(r.area) + "," +
         CsvReal(r.perimeter) + "," + CsvReal(r.compactness) + "\n";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Writes through a sibling temporary so a failed run leaves nothing behind.
void WriteAtomically(const std::string& path, const std::string& contents) {
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".partial";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << contents;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
    }
  }
  fs::rename(tmp, target);
}

void Emit(const std::optional<std::string>& output, const std::string& text,
          std::ostream& out) {
  if (output) {
    WriteAtomically(*output, text);
  } else {
    out << text;
  }
}

int ExitFor(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kTargetTooSmall:
      return kExitUsage;
    default:
      return kExitData;
  }
}

struct BenchContour {
  std::string_view name;
  std::vector<std::size_t> counts;
};

const std::vector<BenchContour>& Contours(BenchTable table) {
  static const std::vector<BenchContour> synthetic = {
      {"chromosome", {15, 6}},
      {"leaf", {21, 16}},
      {"semicircle", {18, 17, 14, 12}},
      {"infinity", {10, 5}},
  };
  static const std::vector<BenchContour> mpeg = {
      {"bell-7", {22, 20, 7}},      {"octopus-14", {79, 43}},
      {"ray-17", {35, 14}},         {"chicken-5", {255, 54}},
      {"device6-9", {84, 22}},      {"bell-10", {110, 42}},
      {"truck-07", {12, 11}},       {"butterfly-13", {525, 65}},
  };
  return table == BenchTable::kSynthetic ? synthetic : mpeg;
}

std::optional<fs::path> FindFixture(const fs::path& dir, std::string_view name) {
  for (const char* ext : {".txt", ".pbm", ".pgm"}) {
    fs::path p = dir / (std::string(name) + ext);
    if (fs::is_regular_file(p)) return p;
  }
  return std::nullopt;
}

std::vector<double> ParseAngles(const std::string& list) {
  std::vector<double> angles;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || !std::isfinite(v)) {
      throw CLI::ValidationError("--angles", "bad angle '" + item + "'");
    }
    angles.push_back(v);
  }
  if (angles.empty()) throw CLI::ValidationError("--angles", "no angles given");
  return angles;
}

int RunApproximate(const RunConfig& config,
                   const std::optional<std::string>& output, std::ostream& out) {
  const DigitalCurve curve = LoadCurveBytes(ReadFile(config.input));

  if (config.angles) {
    const auto* count = std::get_if<CountMode>(&config.mode);
    if (count == nullptr) {
      throw CLI::ValidationError("--angles", "rotation runs need --points");
    }
    Emit(output, RenderRotationCsv(RotationReport(curve, *config.angles, count->m)),
         out);
    return kExitOk;
  }

  Approximation approx =
      std::holds_alternative<CountMode>(config.mode)
          ? EliminateToCount(curve, std::get<CountMode>(config.mode).m)
          : EliminateToError(curve, std::get<MaxErrorMode>(config.mode).max_ise);
  if (const auto* count = std::get_if<CountMode>(&config.mode);
      count != nullptr && approx.result.size() != count->m) {
    throw std::logic_error("elimination stopped at the wrong size");
  }

  std::optional<Baseline> baseline;
  if (config.baseline_rdp) {
    RdpCountResult rdp = RdpToCount(curve, approx.result.size());
    MetricsReport metrics = ComputeMetrics(curve, rdp.points);
    baseline = Baseline{std::move(rdp), metrics};
  }

  switch (config.format) {
    case OutputFormat::kJson:
      Emit(output, RenderJson(approx, config, baseline), out);
      break;
    case OutputFormat::kCsv:
      Emit(output, RenderCsv(approx, config, baseline), out);
      break;
    case OutputFormat::kSvg:
      Emit(output, RenderSvg(approx.curve, approx.result), out);
      break;
  }
  return kExitOk;
}

}  // namespace

std::string FormatReal(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string RenderJson(const Approximation& approx, const RunConfig& config,
                       const std::optional<Baseline>& baseline) {
  const MetricsReport metrics = ComputeMetrics(approx.curve, approx.result);
  Json j;
  if (const auto* count = std::get_if<CountMode>(&config.mode)) {
    j["mode"] = {{"points", count->m}};
  } else {
    j["mode"] = {{"max_ise", RealJson(std::get<MaxErrorMode>(config.mode).max_ise)}};
  }
  j["n"] = approx.curve.size();
  j["initial_dominant_points"] = approx.initial.size();
  j["dominant_points"] = VerticesJson(approx.curve, approx.result);
  j["metrics"] = MetricsJson(metrics);
  if (config.trace) {
    Json steps = Json::array();
    for (std::size_t s = 0; s < approx.trace.size(); ++s) {
      const EliminationStep& step = approx.trace[s];
      steps.push_back({{"step", s + 1},
                       {"removed_index", step.removed_index},
                       {"sig", RealJson(step.sig_at_removal)},
                       {"metrics", MetricsJson(step.metrics_after)}});
    }
    j["trace"] = std::move(steps);
  }
  if (baseline) {
    j["baseline"] = {
        {"method", "rdp"},
        {"epsilon", RealJson(baseline->rdp.epsilon)},
        {"dominant_points", VerticesJson(approx.curve, baseline->rdp.points)},
        {"metrics", MetricsJson(baseline->metrics)}};
  }
  return j.dump(2) + "\n";
}

std::string RenderCsv(const Approximation& approx, const RunConfig& config,
                      const std::optional<Baseline>& baseline) {
  std::string out =
      "method,n,m,cr,ise,fom,we,we2,max_dev,area,perimeter,compactness\n";
  AppendMetricsRow(out, "proposed", ComputeMetrics(approx.curve, approx.result));
  if (baseline) AppendMetricsRow(out, "rdp", baseline->metrics);

  out += "\nvertex,index,x,y\n";
  for (std::size_t k = 0; k < approx.result.size(); ++k) {
    const std::size_t idx = approx.result[k];
    out += std::to_string(k) + "," + std::to_string(idx) + "," +
           FormatReal(approx.curve[idx].x) + "," +
           FormatReal(approx.curve[idx].y) + "\n";
  }
  if (config.trace) {
    out += "\nstep,removed_index,sig,m,ise,max_dev\n";
    for (std::size_t s = 0; s < approx.trace.size(); ++s) {
      const EliminationStep& step = approx.trace[s];
      out += std::to_string(s + 1) + "," + std::to_string(step.removed_index) +
             "," + FormatReal(step.sig_at_removal) + "," +
             std::to_string(step.metrics_after.m) + "," +
             FormatReal(step.metrics_after.ise) + "," +
             FormatReal(step.metrics_after.max_dev) + "\n";
    }
  }
  return out;
}

std::string RenderSvg(const DigitalCurve& curve,
                      const DominantPointSet& dominant) {
  constexpr double kMargin = 2.0;
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (const Point& p : curve.points()) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double width = max_x - min_x + 2 * kMargin;
  const double height = max_y - min_y + 2 * kMargin;
  auto coords = [&](const Point& p) {
    return FormatReal(p.x - min_x + kMargin) + "," +
           FormatReal(max_y - p.y + kMargin);
  };

  std::string svg =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
      FormatReal(width) + " " + FormatReal(height) + "\" width=\"" +
      FormatReal(width * 8) + "\" height=\"" + FormatReal(height * 8) + "\">\n";

  svg += "<g id=\"curve\" fill=\"none\" stroke=\"#888888\" stroke-width=\"0.15\">\n<polyline points=\"";
  for (const Point& p : curve.points()) svg += coords(p) + " ";
  if (curve.closed()) svg += coords(curve[0]);
  svg += "\"/>\n</g>\n";

  svg += "<g id=\"polygon\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"0.25\">\n<polygon points=\"";
  for (std::size_t k = 0; k < dominant.size(); ++k) {
    if (k > 0) svg += " ";
    svg += coords(curve[dominant[k]]);
  }
  svg += "\"/>\n</g>\n";

  svg += "<g id=\"markers\" fill=\"#1f77b4\">\n";
  for (std::size_t idx : dominant.indices()) {
    const Point& p = curve[idx];
    svg += "<circle cx=\"" + FormatReal(p.x - min_x + kMargin) + "\" cy=\"" +
           FormatReal(max_y - p.y + kMargin) + "\" r=\"0.4\"/>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

std::string RenderRotationCsv(const std::vector<RotationRow>& rows) {
  std::string out = "angle,max_dev,ise,area,perimeter,compactness\n";
  for (const RotationRow& r : rows) {
    out += FormatReal(r.angle_deg) + "," + FormatReal(r.max_dev) + "," +
           FormatReal(r.ise) + "," + FormatReal(r.area) + "," +
           FormatReal(r.perimeter) + "," + FormatReal(r.compactness) + "\n";
  }
  return out;
}

std::vector<double> DefaultRotationAngles() {
  return {0, 20, 30, 45, 70, 80, 180};
}

BenchOutput RunBench(const std::string& fixture_dir, BenchTable table) {
  struct Row {
    std::size_t contour;
    std::size_t m_order;
    int method;  // 0 proposed, 1 rdp
    std::string text;
  };
  BenchOutput result;
  std::vector<Row> rows;
  const auto& contours = Contours(table);
  const bool synthetic = table == BenchTable::kSynthetic;

  for (std::size_t c = 0; c < contours.size(); ++c) {
    const BenchContour& contour = contours[c];
    const auto path = FindFixture(fixture_dir, contour.name);
    if (!path) {
      result.warnings.push_back("missing fixture " + std::string(contour.name));
      result.partial = true;
      continue;
    }
    std::optional<DigitalCurve> curve;
    try {
      curve = LoadCurveBytes(ReadFile(path->string()));
    } catch (const Error& e) {
      result.warnings.push_back(std::string(contour.name) + ": " + e.what());
      result.partial = true;
      continue;
    }
    for (std::size_t k = 0; k < contour.counts.size(); ++k) {
      const std::size_t m = contour.counts[k];
      try {
        const Approximation approx = EliminateToCount(*curve, m);
        const RdpCountResult rdp = RdpToCount(*curve, m);
        const MetricsReport mine = ComputeMetrics(*curve, approx.result);
        const MetricsReport theirs = ComputeMetrics(*curve, rdp.points);
        auto line = [&](std::string_view method, const MetricsReport& r) {
          std::string s = std::string(contour.name) + "," + std::string(method) +
                          "," + std::to_string(r.m) + "," + CsvReal(r.cr) + "," +
                          CsvReal(r.ise) + "," + CsvReal(r.we) + ",";
          s += synthetic ? CsvReal(r.fom) : CsvReal(r.we2);
          return s + "\n";
        };
        rows.push_back({c, k, 0, line("proposed", mine)});
        rows.push_back({c, k, 1, line("rdp", theirs)});
      } catch (const Error& e) {
        result.warnings.push_back(std::string(contour.name) + " m=" +
                                  std::to_string(m) + ": " + e.what());
        result.partial = true;
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.contour, a.m_order, a.method) <
           std::tie(b.contour, b.m_order, b.method);
  });
  result.csv = synthetic ? "contour,method,m,CR,ISE,WE,FOM\n"
                         : "contour,method,k,CR,ISE,WE,WE2\n";
  for (const Row& r : rows) result.csv += r.text;
  return result;
}

int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Polygonal approximation of closed digital curves by "
               "iterative dominant point elimination",
               "approx"};
  app.set_help_all_flag("--help-all");

  std::string input;
  std::optional<std::size_t> points;
  std::optional<double> max_ise;
  std::string format = "json";
  std::string baseline;
  std::string angles;
  bool trace = false;
  std::optional<std::string> output;

  app.add_option("--input", input, "Curve text file or PBM/PGM image");
  auto* points_opt = app.add_option("--points", points, "Target vertex count (>= 3)");
  auto* ise_opt = app.add_option("--max-ise", max_ise, "ISE budget");
  points_opt->excludes(ise_opt);
  app.add_option("--format", format, "json, csv or svg")
      ->check(CLI::IsMember({"json", "csv", "svg"}));
  app.add_option("--baseline", baseline, "Also run a baseline (rdp)")
      ->check(CLI::IsMember({"rdp"}));
  app.add_option("--angles", angles, "Comma-separated rotation angles (degrees)");
  app.add_flag("--trace", trace, "Include the per-step elimination trace");
  app.add_option("--output", output, "Write to PATH instead of stdout");

  auto* bench = app.add_subcommand("bench", "Reproduce a comparison table as CSV");
  std::string fixtures;
  std::string table = "synthetic";
  bench->add_option("--fixtures", fixtures, "Fixture directory")->required();
  bench->add_option("--table", table, "synthetic or mpeg")
      ->check(CLI::IsMember({"synthetic", "mpeg"}));
  bench->add_option("--output", output, "Write to PATH instead of stdout");

  auto* rotate = app.add_subcommand("rotate", "Rotation robustness table as CSV");
  std::string rotate_input;
  std::size_t rotate_points = 20;
  std::string rotate_angles;
  rotate->add_option("--input", rotate_input, "Curve text file or PBM/PGM image")
      ->required();
  rotate->add_option("--points", rotate_points, "Target vertex count (>= 3)");
  rotate->add_option("--angles", rotate_angles,
                     "Comma-separated angles (default 0,20,30,45,70,80,180)");
  rotate->add_option("--output", output, "Write to PATH instead of stdout");

  std::vector<const char*> argv{"approx"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bench->parsed()) {
      BenchOutput result = RunBench(
          fixtures, table == "mpeg" ? BenchTable::kMpeg : BenchTable::kSynthetic);
      for (const std::string& w : result.warnings) err << "warning: " << w << "\n";
      Emit(output, result.csv, out);
      return result.partial ? kExitData : kExitOk;
    }

    RunConfig config;
    if (rotate->parsed()) {
      config.input = rotate_input;
      config.mode = CountMode{rotate_points};
      config.angles = rotate_angles.empty() ? DefaultRotationAngles()
                                            : ParseAngles(rotate_angles);
    } else {
      if (input.empty()) {
        err << "error: --input is required\n";
        return kExitUsage;
      }
      if (!points && !max_ise) {
        err << "error: one of --points or --max-ise is required\n";
        return kExitUsage;
      }
      config.input = input;
      if (points) {
        config.mode = CountMode{*points};
      } else {
        config.mode = MaxErrorMode{*max_ise};
      }
      config.format = format == "csv"   ? OutputFormat::kCsv
                      : format == "svg" ? OutputFormat::kSvg
                                        : OutputFormat::kJson;
      config.baseline_rdp = baseline == "rdp";
      config.trace = trace;
      if (!angles.empty()) config.angles = ParseAngles(angles);
    }
    if (const auto* count = std::get_if<CountMode>(&config.mode);
        count != nullptr && count->m < kMinPolygonSize) {
      err << "error: target below minimum polygon size 3\n";
      return kExitUsage;
    }
    return RunApproximate(config, output, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitFor(e);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace dpapprox::cli
