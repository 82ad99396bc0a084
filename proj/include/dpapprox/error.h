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

#ifndef DPAPPROX_ERROR_H_
#define DPAPPROX_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace dpapprox {

enum class ErrorCode {
  kTooFewPoints,
  kNonAdjacent,
  kNotOnGrid,
  kOpenCurveWrap,
  kOpenCurve,
  kDegenerateChord,
  kTargetTooSmall,
  kTargetTooLarge,
  kParseError,
  kEmptyImage,
  kDegenerateComponent,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported with this exception type. `code()` lets
// callers (the CLI in particular) map failures to exit statuses without
// parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures additionally carry the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dpapprox

#endif  // DPAPPROX_ERROR_H_
