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

#include "misub/config.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "misub/error.h"
#include "text.h"

namespace misub {
namespace {

[[noreturn]] void Bad(std::string_view key, std::string_view value,
                      std::string_view why) {
  throw Error(ErrorKind::kConfig, "config key '" + std::string(key) +
                                      "' = '" + std::string(value) +
                                      "': " + std::string(why));
}

std::vector<std::string_view> ListItems(std::string_view value) {
  std::vector<std::string_view> items;
  for (auto item : internal::SplitFields(value)) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

double ToDouble(std::string_view key, std::string_view value) {
  double v = 0.0;
  if (!internal::ParseDouble(value, v)) Bad(key, value, "expected a number");
  return v;
}

std::vector<double> ToDoubles(std::string_view key, std::string_view value) {
  std::vector<double> out;
  for (auto item : ListItems(value)) out.push_back(ToDouble(key, item));
  if (out.empty()) Bad(key, value, "expected a non-empty list of numbers");
  return out;
}

std::uint64_t ToUnsigned(std::string_view key, std::string_view value) {
  value = internal::Trim(value);
  std::uint64_t v = 0;
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, v);
  if (ec != std::errc() || ptr != end || value.empty()) {
    Bad(key, value, "expected a non-negative integer");
  }
  return v;
}

bool ToBool(std::string_view key, std::string_view value) {
  std::string lower(internal::Trim(value));
  for (char& c : lower) c = static_cast<char>(std::tolower(c));
  if (lower == "true" || lower == "1" || lower == "yes" || lower == "on") {
    return true;
  }
  if (lower == "false" || lower == "0" || lower == "no" || lower == "off") {
    return false;
  }
  Bad(key, value, "expected true or false");
}

SynthSpec& Synth(ExperimentConfig& cfg) {
  if (!cfg.synth) cfg.synth.emplace();
  return *cfg.synth;
}

}  // namespace

std::string_view ToString(Selector selector) {
  return selector == Selector::kMi ? "mi" : "conventional";
}

Selector ParseSelector(std::string_view text) {
  std::string lower(internal::Trim(text));
  for (char& c : lower) c = static_cast<char>(std::tolower(c));
  if (lower == "mi") return Selector::kMi;
  if (lower == "conventional" || lower == "conv") {
    return Selector::kConventional;
  }
  throw Error(ErrorKind::kConfig,
              "unknown selector '" + std::string(text) + "'");
}

void ApplyConfigValue(ExperimentConfig& cfg, std::string_view key,
                      std::string_view value) {
  key = internal::Trim(key);
  value = internal::Trim(value);
  if (key == "data") {
    cfg.data_path = std::string(value);
  } else if (key == "label_column") {
    cfg.label_column = std::string(value);
  } else if (key == "synth") {
    if (ToBool(key, value)) {
      Synth(cfg);
    } else {
      cfg.synth.reset();
    }
  } else if (key == "synth_n_per_class") {
    Synth(cfg).n_per_class = ToUnsigned(key, value);
  } else if (key == "synth_mean_a") {
    Synth(cfg).mean_a = ToDoubles(key, value);
  } else if (key == "synth_mean_b") {
    Synth(cfg).mean_b = ToDoubles(key, value);
  } else if (key == "synth_cov") {
    auto entries = ToDoubles(key, value);
    const auto d = static_cast<std::size_t>(
        std::llround(std::sqrt(static_cast<double>(entries.size()))));
    if (d * d != entries.size()) Bad(key, value, "expected d*d entries");
    Synth(cfg).cov = Matrix(d, d, std::move(entries));
  } else if (key == "synth_seed") {
    Synth(cfg).seed = ToUnsigned(key, value);
  } else if (key == "transforms") {
    cfg.transforms.clear();
    for (auto item : ListItems(value)) {
      cfg.transforms.push_back(ParseTransformKind(item));
    }
  } else if (key == "selectors") {
    cfg.selectors.clear();
    for (auto item : ListItems(value)) {
      cfg.selectors.push_back(ParseSelector(item));
    }
  } else if (key == "fractions") {
    cfg.fractions = ToDoubles(key, value);
  } else if (key == "classifiers") {
    cfg.classifiers.clear();
    for (auto item : ListItems(value)) {
      cfg.classifiers.push_back(ParseClassifierKind(item));
    }
  } else if (key == "bins") {
    cfg.bins = ToUnsigned(key, value);
  } else if (key == "repeats") {
    cfg.repeats = ToUnsigned(key, value);
  } else if (key == "train_fraction") {
    cfg.train_fraction = ToDouble(key, value);
  } else if (key == "seed") {
    cfg.seed = ToUnsigned(key, value);
  } else if (key == "stratified") {
    cfg.stratified = ToBool(key, value);
  } else if (key == "standardize") {
    cfg.standardize = ToBool(key, value);
  } else if (key == "ridge") {
    cfg.ridge = ToDouble(key, value);
  } else if (key == "knn_neighbors") {
    cfg.knn_neighbors = ToUnsigned(key, value);
  } else {
    throw Error(ErrorKind::kConfig, "unknown config key '" + std::string(key) +
                                        "'");
  }
}

ExperimentConfig ParseConfig(std::string_view text,
                             const std::filesystem::path& base_dir) {
  ExperimentConfig cfg;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_number;
    if (const std::size_t hash = line.find('#');
        hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = internal::Trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::kConfig, "config line " +
                                          std::to_string(line_number) +
                                          ": expected key = value");
    }
    ApplyConfigValue(cfg, line.substr(0, eq), line.substr(eq + 1));
  }
  if (!cfg.data_path.empty() && cfg.data_path.is_relative() &&
      !base_dir.empty()) {
    cfg.data_path = base_dir / cfg.data_path;
  }
  return cfg;
}

ExperimentConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kConfig,
                "cannot open config '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseConfig(buffer.str(), path.parent_path());
}

void ValidateConfig(const ExperimentConfig& cfg) {
  auto fail = [](const std::string& why) {
    throw Error(ErrorKind::kConfig, why);
  };
  if (cfg.data_path.empty() && !cfg.synth) {
    fail("either data or synth must be set");
  }
  if (!cfg.data_path.empty() && cfg.synth) {
    fail("data and synth are mutually exclusive");
  }
  if (cfg.transforms.empty()) fail("no transforms selected");
  if (cfg.selectors.empty()) fail("no selectors selected");
  if (cfg.classifiers.empty()) fail("no classifiers selected");
  if (cfg.fractions.empty()) fail("no fractions given");
  for (double f : cfg.fractions) {
    if (!(f > 0.0 && f <= 1.0)) fail("fractions must lie in (0, 1]");
  }
  if (cfg.bins == 1) fail("bins must be 0 (automatic) or >= 2");
  if (cfg.repeats < 1) fail("repeats must be >= 1");
  if (!(cfg.train_fraction > 0.0 && cfg.train_fraction < 1.0)) {
    fail("train_fraction must lie in (0, 1)");
  }
  if (cfg.ridge && !(*cfg.ridge >= 0.0)) fail("ridge must be >= 0");
  if (cfg.knn_neighbors < 1) fail("knn_neighbors must be >= 1");
  if (cfg.synth) {
    const SynthSpec& s = *cfg.synth;
    if (s.n_per_class < 2) fail("synth_n_per_class must be >= 2");
    if (s.mean_a.size() != s.mean_b.size() ||
        s.cov.rows() != s.mean_a.size() || s.cov.cols() != s.mean_a.size()) {
      fail("synth means and covariance dimensions disagree");
    }
  }
}

}  // namespace misub
