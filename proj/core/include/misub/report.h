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

#ifndef MISUB_REPORT_H_
#define MISUB_REPORT_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "misub/experiment.h"

namespace misub {

enum class ReportFormat { kCsv, kMarkdown };

ReportFormat ParseReportFormat(std::string_view text);

// Column label for a fraction, e.g. 0.1 -> "10%".
std::string FractionLabel(double fraction);

// Mean accuracy table: transform, selector, classifier, then one column per
// fraction with 2-decimal percentages.
std::string ReportCsv(const ExperimentReport& report);

// Per-repeat long format: transform, selector, classifier, fraction, k,
// repeat, accuracy (percent, 17 significant digits).
std::string ReportDetailCsv(const ExperimentReport& report);

// Basis difference: transform, then one column per fraction (percent).
std::string BasisDifferenceCsv(const ExperimentReport& report);

// Tables laid out as transform rows (X and X+MI) by fraction columns, one
// column block per classifier; followed by standard deviations and basis
// differences.
std::string ReportMarkdown(const ExperimentReport& report);

std::string RenderReport(const ExperimentReport& report, ReportFormat format);
void EmitReport(const ExperimentReport& report, ReportFormat format,
                const std::filesystem::path& path);

// Writes `text` verbatim; throws kIo on failure.
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace misub

#endif  // MISUB_REPORT_H_
