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

#include "misub/report.h"

#include <cctype>
#include <fstream>
#include <sstream>

#include "misub/error.h"
#include "text.h"

namespace misub {
namespace {

using internal::FormatFixed;

std::string ClassifierTitle(ClassifierKind kind) {
  return kind == ClassifierKind::kNaiveBayes ? "Naive Bayes" : "kNN";
}

std::string RowLabel(TransformKind kind, Selector selector) {
  std::string label(ToString(kind));
  if (selector == Selector::kMi) label += "+MI";
  return label;
}

const CellResult* FindCell(const ExperimentReport& report, const CellKey& key) {
  const auto it = report.cells.find(key);
  return it == report.cells.end() ? nullptr : &it->second;
}

void MarkdownHeader(std::ostringstream& out, const ExperimentReport& report,
                    std::string_view first, bool per_classifier) {
  out << "| " << first << " |";
  std::size_t columns = 0;
  if (per_classifier) {
    for (ClassifierKind ck : report.classifiers) {
      for (double f : report.fractions) {
        out << ' ' << ClassifierTitle(ck) << ' ' << FractionLabel(f) << " |";
        ++columns;
      }
    }
  } else {
    for (double f : report.fractions) {
      out << ' ' << FractionLabel(f) << " |";
      ++columns;
    }
  }
  out << "\n|:--|";
  for (std::size_t i = 0; i < columns; ++i) out << "--:|";
  out << '\n';
}

void MarkdownCellTable(std::ostringstream& out, const ExperimentReport& report,
                       bool stddev) {
  MarkdownHeader(out, report, "Transform", true);
  for (TransformKind kind : report.transforms) {
    for (Selector selector : report.selectors) {
      out << "| " << RowLabel(kind, selector) << " |";
      for (ClassifierKind ck : report.classifiers) {
        for (std::size_t fi = 0; fi < report.fractions.size(); ++fi) {
          const CellResult* cell = FindCell(report, {kind, selector, fi, ck});
          out << ' '
              << (cell ? FormatFixed(stddev ? cell->stddev_percent
                                            : cell->mean_percent,
                                     2)
                       : std::string("-"))
              << " |";
        }
      }
      out << '\n';
    }
  }
}

}  // namespace

ReportFormat ParseReportFormat(std::string_view text) {
  std::string lower(text);
  for (char& c : lower) c = static_cast<char>(std::tolower(c));
  if (lower == "csv") return ReportFormat::kCsv;
  if (lower == "markdown" || lower == "md") return ReportFormat::kMarkdown;
  throw Error(ErrorKind::kConfig,
              "unknown report format '" + std::string(text) + "'");
}

std::string FractionLabel(double fraction) {
  std::string text = FormatFixed(fraction * 100.0, 2);
  while (text.back() == '0') text.pop_back();
  if (text.back() == '.') text.pop_back();
  return text + "%";
}

std::string ReportCsv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "transform,selector,classifier";
  for (double f : report.fractions) out << ',' << FractionLabel(f);
  out << '\n';
  for (TransformKind kind : report.transforms) {
    for (Selector selector : report.selectors) {
      for (ClassifierKind ck : report.classifiers) {
        out << ToString(kind) << ',' << ToString(selector) << ','
            << ToString(ck);
        for (std::size_t fi = 0; fi < report.fractions.size(); ++fi) {
          const CellResult* cell = FindCell(report, {kind, selector, fi, ck});
          out << ',' << (cell ? FormatFixed(cell->mean_percent, 2) : "");
        }
        out << '\n';
      }
    }
  }
  return out.str();
}

std::string ReportDetailCsv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "transform,selector,classifier,fraction,k,repeat,accuracy\n";
  for (const auto& [key, cell] : report.cells) {
    for (std::size_t r = 0; r < cell.accuracies.size(); ++r) {
      out << ToString(key.transform) << ',' << ToString(key.selector) << ','
          << ToString(key.classifier) << ','
          << internal::FormatDouble(report.fractions[key.fraction_index])
          << ',' << cell.k << ',' << r << ','
          << internal::FormatDouble(100.0 * cell.accuracies[r]) << '\n';
    }
  }
  return out.str();
}

std::string BasisDifferenceCsv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "transform";
  for (double f : report.fractions) out << ',' << FractionLabel(f);
  out << '\n';
  for (TransformKind kind : report.transforms) {
    out << ToString(kind);
    for (std::size_t fi = 0; fi < report.fractions.size(); ++fi) {
      const auto it = report.basis_difference.find({kind, fi});
      out << ','
          << (it == report.basis_difference.end()
                  ? std::string()
                  : FormatFixed(it->second.mean_percent, 2));
    }
    out << '\n';
  }
  return out.str();
}

std::string ReportMarkdown(const ExperimentReport& report) {
  const ReportMetadata& m = report.metadata;
  std::ostringstream out;
  out << "# Conventional vs MI-selected subspaces\n\n";
  out << "- dataset: " << m.dataset << " (d=" << m.dim << ", N=" << m.samples
      << ", C=" << m.classes << ")\n";
  out << "- repeats: " << m.repeats
      << ", train fraction: " << FormatFixed(m.train_fraction, 2)
      << ", seed: " << m.seed << '\n';
  out << "- histogram bins: "
      << (m.bins ? std::to_string(m.bins) : std::string("ceil(sqrt(N_train))"))
      << ", standardize: " << (m.standardize ? "yes" : "no") << '\n';
  if (!m.timestamp.empty()) out << "- generated: " << m.timestamp << '\n';
  out << "\n## Mean accuracy (%)\n\n";
  MarkdownCellTable(out, report, /*stddev=*/false);
  out << "\n## Standard deviation across repeats (%)\n\n";
  MarkdownCellTable(out, report, /*stddev=*/true);
  out << "\n## Bases differing between MI and conventional selection (%)\n\n";
  MarkdownHeader(out, report, "Transform", false);
  for (TransformKind kind : report.transforms) {
    out << "| " << ToString(kind) << " |";
    for (std::size_t fi = 0; fi < report.fractions.size(); ++fi) {
      const auto it = report.basis_difference.find({kind, fi});
      out << ' '
          << (it == report.basis_difference.end()
                  ? std::string("-")
                  : FormatFixed(it->second.mean_percent, 2))
          << " |";
    }
    out << '\n';
  }
  return out.str();
}

std::string RenderReport(const ExperimentReport& report, ReportFormat format) {
  return format == ReportFormat::kCsv ? ReportCsv(report)
                                      : ReportMarkdown(report);
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorKind::kIo, "write to '" + path.string() + "' failed");
}

void EmitReport(const ExperimentReport& report, ReportFormat format,
                const std::filesystem::path& path) {
  WriteTextFile(path, RenderReport(report, format));
}

}  // namespace misub
