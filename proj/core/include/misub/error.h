// Copyright 2026 The misub Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MISUB_ERROR_H_
#define MISUB_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace misub {

enum class ErrorKind {
  kShape,             // operand dimensions disagree
  kInsufficientData,  // too few samples for the requested statistic
  kSingular,          // matrix not positive definite / not PSD
  kNonFinite,         // NaN or Inf where finite values are required
  kRange,             // index or count argument out of range
  kData,              // malformed or missing input data
  kConfig,            // invalid experiment configuration
  kIo,                // file could not be read or written
  kNumeric,           // iterative method failed to converge
};

std::string_view ToString(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Process exit code for the CLI: 2 config, 3 data, 4 numeric.
int ExitCodeFor(ErrorKind kind);

}  // namespace misub

#endif  // MISUB_ERROR_H_
