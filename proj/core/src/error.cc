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

#include "misub/error.h"

namespace misub {

std::string_view ToString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kShape: return "shape error";
    case ErrorKind::kInsufficientData: return "insufficient data";
    case ErrorKind::kSingular: return "singular matrix";
    case ErrorKind::kNonFinite: return "non-finite value";
    case ErrorKind::kRange: return "out of range";
    case ErrorKind::kData: return "data error";
    case ErrorKind::kConfig: return "config error";
    case ErrorKind::kIo: return "i/o error";
    case ErrorKind::kNumeric: return "numeric failure";
  }
  return "unknown error";
}

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kConfig:
    case ErrorKind::kRange:
      return 2;
    case ErrorKind::kData:
    case ErrorKind::kIo:
    case ErrorKind::kInsufficientData:
    case ErrorKind::kNonFinite:
      return 3;
    case ErrorKind::kShape:
    case ErrorKind::kSingular:
    case ErrorKind::kNumeric:
      return 4;
  }
  return 4;
}

}  // namespace misub
