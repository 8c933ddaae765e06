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


#include <filesystem>
#include <fstream>
#include <vector>

#include <gtest/gtest.h>

#include "misub/config.h"
#include "test_util.h"

namespace misub {
namespace {

using testing::ExpectError;

TEST(ParseConfigTest, DefaultsWithoutKeys) {
  ExperimentConfig cfg = ParseConfig("# nothing here\n\n");
  EXPECT_EQ(cfg.repeats, 5u);
  EXPECT_EQ(cfg.train_fraction, 0.5);
  EXPECT_EQ(cfg.fractions, (std::vector<double>{0.1, 0.3, 0.5, 0.7}));
  EXPECT_EQ(cfg.transforms.size(), 4u);
  EXPECT_EQ(cfg.classifiers.size(), 2u);
  EXPECT_TRUE(cfg.stratified);
  EXPECT_FALSE(cfg.standardize);
  EXPECT_EQ(cfg.bins, 0u);
  EXPECT_FALSE(cfg.ridge.has_value());
}

TEST(ParseConfigTest, ReadsEveryKey) {
  ExperimentConfig cfg = ParseConfig(
      "data = sonar.csv  # trailing comment\n"
      "label_column=Class\n"
      "transforms = pca, rp\n"
      "selectors = mi\n"
      "fractions = 0.25,1\n"
      "classifiers = knn\n"
      "bins = 12\n"
      "repeats = 3\n"
      "train_fraction = 0.6\n"
      "seed = 42\n"
      "stratified = false\n"
      "standardize = yes\n"
      "ridge = 1e-3\n"
      "knn_neighbors = 7\n",
      "/data/dir");
  EXPECT_EQ(cfg.data_path, std::filesystem::path("/data/dir/sonar.csv"));
  EXPECT_EQ(cfg.label_column, "Class");
  EXPECT_EQ(cfg.transforms,
            (std::vector<TransformKind>{TransformKind::kPca,
                                        TransformKind::kRp}));
  EXPECT_EQ(cfg.selectors, (std::vector<Selector>{Selector::kMi}));
  EXPECT_EQ(cfg.fractions, (std::vector<double>{0.25, 1.0}));
  EXPECT_EQ(cfg.classifiers,
            (std::vector<ClassifierKind>{ClassifierKind::kKnn}));
  EXPECT_EQ(cfg.bins, 12u);
  EXPECT_EQ(cfg.repeats, 3u);
  EXPECT_EQ(cfg.train_fraction, 0.6);
  EXPECT_EQ(cfg.seed, 42u);
  EXPECT_FALSE(cfg.stratified);
  EXPECT_TRUE(cfg.standardize);
  EXPECT_EQ(cfg.ridge, 1e-3);
  EXPECT_EQ(cfg.knn_neighbors, 7u);
  EXPECT_NO_THROW(ValidateConfig(cfg));
}

TEST(ParseConfigTest, SynthKeys) {
  ExperimentConfig cfg = ParseConfig(
      "synth = true\nsynth_n_per_class = 20\nsynth_mean_a = 1,2\n"
      "synth_mean_b = 3,4\nsynth_cov = 1,0,0,2\nsynth_seed = 5\n");
  ASSERT_TRUE(cfg.synth.has_value());
  EXPECT_EQ(cfg.synth->n_per_class, 20u);
  EXPECT_EQ(cfg.synth->mean_b, (std::vector<double>{3, 4}));
  EXPECT_EQ(cfg.synth->cov, (Matrix{{1, 0}, {0, 2}}));
  EXPECT_EQ(cfg.synth->seed, 5u);
  EXPECT_NO_THROW(ValidateConfig(cfg));
}

TEST(ParseConfigTest, RejectsMalformedInput) {
  ExpectError(ErrorKind::kConfig, [] { ParseConfig("unknown = 1\n"); });
  ExpectError(ErrorKind::kConfig, [] { ParseConfig("no equals sign\n"); });
  ExpectError(ErrorKind::kConfig, [] { ParseConfig("bins = -2\n"); });
  ExpectError(ErrorKind::kConfig, [] { ParseConfig("seed = x\n"); });
  ExpectError(ErrorKind::kConfig, [] { ParseConfig("standardize = maybe\n"); });
  ExpectError(ErrorKind::kConfig, [] { ParseConfig("transforms = ica\n"); });
  ExpectError(ErrorKind::kConfig, [] { ParseConfig("synth_cov = 1,2,3\n"); });
  ExpectError(ErrorKind::kConfig,
              [] { LoadConfig("/nonexistent/misub.cfg"); });
}

TEST(ValidateConfigTest, RejectsOutOfRangeValues) {
  auto bad = [](const char* text) {
    ExpectError(ErrorKind::kConfig,
                [&] { ValidateConfig(ParseConfig(text)); });
  };
  bad("fractions = 0.5\n");  // neither data nor synth
  bad("synth = true\ndata = x.csv\n");
  bad("synth = true\nfractions = 0,0.5\n");
  bad("synth = true\nfractions = 1.5\n");
  bad("synth = true\nbins = 1\n");
  bad("synth = true\nrepeats = 0\n");
  bad("synth = true\ntrain_fraction = 1\n");
  bad("synth = true\nridge = -1\n");
  bad("synth = true\nknn_neighbors = 0\n");
  bad("synth = true\nsynth_mean_a = 1,2,3\n");
}

TEST(LoadConfigTest, RelativeDataResolvesAgainstConfigDirectory) {
  auto dir = std::filesystem::path(::testing::TempDir()) / "cfgdir";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "run.cfg") << "data = d/x.csv\n";
  EXPECT_EQ(LoadConfig(dir / "run.cfg").data_path, dir / "d/x.csv");
}

}  // namespace
}  // namespace misub
