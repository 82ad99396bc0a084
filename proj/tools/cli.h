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

#ifndef DPAPPROX_TOOLS_CLI_H_
#define DPAPPROX_TOOLS_CLI_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dpapprox/approximator.h"
#include "dpapprox/metrics.h"
#include "dpapprox/rdp.h"

namespace dpapprox::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
  kExitInternal = 3,
};

enum class OutputFormat { kJson, kCsv, kSvg };
enum class BenchTable { kSynthetic, kMpeg };

struct CountMode {
  std::size_t m = 0;
};
struct MaxErrorMode {
  double max_ise = 0.0;
};

struct RunConfig {
  std::string input;
  std::variant<CountMode, MaxErrorMode> mode;
  OutputFormat format = OutputFormat::kJson;
  std::optional<std::vector<double>> angles;
  bool baseline_rdp = false;
  bool trace = false;
};

// Six significant digits, ties to even ("%.6g").
std::string FormatReal(double v);

struct Baseline {
  RdpCountResult rdp;
  MetricsReport metrics;
};

std::string RenderJson(const Approximation& approx, const RunConfig& config,
                       const std::optional<Baseline>& baseline);
std::string RenderCsv(const Approximation& approx, const RunConfig& config,
                      const std::optional<Baseline>& baseline);
// Groups "curve" (polyline), "polygon" and "markers", y flipped for display.
std::string RenderSvg(const DigitalCurve& curve,
                      const DominantPointSet& dominant);
std::string RenderRotationCsv(const std::vector<RotationRow>& rows);

// Default angles of the rotation experiment.
std::vector<double> DefaultRotationAngles();

struct BenchOutput {
  std::string csv;
  std::vector<std::string> warnings;
  bool partial = false;
};

// One row per (contour, method, m) for the contours of `table` found in
// `fixture_dir` as <name>.txt, <name>.pbm or <name>.pgm.
BenchOutput RunBench(const std::string& fixture_dir, BenchTable table);

// Entry point shared by the executable and the tests.
int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err);

}  // namespace dpapprox::cli

#endif  // DPAPPROX_TOOLS_CLI_H_
