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


#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "misub/report.h"
#include "test_util.h"

namespace misub {
namespace {

std::size_t CountLines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

ExperimentReport OneCellReport() {
  ExperimentReport r;
  r.metadata.dataset = "toy";
  r.metadata.repeats = 2;
  r.transforms = {TransformKind::kPca};
  r.selectors = {Selector::kMi};
  r.fractions = {0.1};
  r.classifiers = {ClassifierKind::kNaiveBayes};
  CellResult cell{.k = 1, .accuracies = {0.75, 0.8}};
  Summarize(cell);
  r.cells[{TransformKind::kPca, Selector::kMi, 0,
           ClassifierKind::kNaiveBayes}] = cell;
  r.basis_difference[{TransformKind::kPca, 0}] = {{0.0, 100.0}, 50.0};
  return r;
}

TEST(FractionLabelTest, Percentages) {
  EXPECT_EQ(FractionLabel(0.1), "10%");
  EXPECT_EQ(FractionLabel(0.7), "70%");
  EXPECT_EQ(FractionLabel(1.0), "100%");
  EXPECT_EQ(FractionLabel(0.125), "12.5%");
}

TEST(ReportCsvTest, OneCellGivesSingleDataRow) {
  std::string csv = ReportCsv(OneCellReport());
  EXPECT_EQ(csv, "transform,selector,classifier,10%\nPCA,mi,nb,77.50\n");
}

TEST(ReportCsvTest, DetailAndDifferenceTables) {
  ExperimentReport r = OneCellReport();
  EXPECT_EQ(CountLines(ReportDetailCsv(r)), 3u);
  EXPECT_EQ(BasisDifferenceCsv(r), "transform,10%\nPCA,50.00\n");
}

TEST(ReportMarkdownTest, TableLayout) {
  ExperimentReport r = OneCellReport();
  r.selectors = {Selector::kConventional, Selector::kMi};
  r.fractions = {0.1, 0.3};
  r.classifiers = {ClassifierKind::kNaiveBayes, ClassifierKind::kKnn};
  std::string md = ReportMarkdown(r);
  EXPECT_NE(md.find("| Transform | Naive Bayes 10% | Naive Bayes 30% | "
                    "kNN 10% | kNN 30% |"),
            std::string::npos)
      << md;
  EXPECT_NE(md.find("| PCA | - | - | - | - |"), std::string::npos);
  EXPECT_NE(md.find("| PCA+MI | 77.50 | - | - | - |"), std::string::npos);
  EXPECT_NE(md.find("| PCA | 50.00 | - |"), std::string::npos);
  EXPECT_EQ(md.find("generated:"), std::string::npos);
  r.metadata.timestamp = "2026-01-01T00:00:00Z";
  EXPECT_NE(ReportMarkdown(r).find("generated: 2026"), std::string::npos);
}

TEST(EmitReportTest, ReEmissionIsByteIdentical) {
  ExperimentReport r = OneCellReport();
  auto dir = std::filesystem::path(::testing::TempDir());
  for (ReportFormat f : {ReportFormat::kCsv, ReportFormat::kMarkdown}) {
    EmitReport(r, f, dir / "a.out");
    EmitReport(r, f, dir / "b.out");
    std::ifstream a(dir / "a.out", std::ios::binary);
    std::ifstream b(dir / "b.out", std::ios::binary);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    EXPECT_EQ(sa.str(), sb.str());
    EXPECT_EQ(sa.str(), RenderReport(r, f));
  }
  testing::ExpectError(ErrorKind::kIo, [&] {
    EmitReport(r, ReportFormat::kCsv, "/nonexistent/dir/report.csv");
  });
}

TEST(ReportFormatTest, Parse) {
  EXPECT_EQ(ParseReportFormat("CSV"), ReportFormat::kCsv);
  EXPECT_EQ(ParseReportFormat("md"), ReportFormat::kMarkdown);
  testing::ExpectError(ErrorKind::kConfig, [] { ParseReportFormat("pdf"); });
}

}  // namespace
}  // namespace misub
