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
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "misub/dataset.h"
#include "misub/linalg.h"
#include "misub/random.h"
#include "test_util.h"

namespace misub {
namespace {

namespace fs = std::filesystem;
using testing::ExpectError;

fs::path WriteTemp(const std::string& name, const std::string& text) {
  fs::path p = fs::path(::testing::TempDir()) / name;
  std::ofstream(p) << text;
  return p;
}

Dataset Balanced(std::size_t n_per_class, std::size_t classes = 2) {
  const std::size_t n = n_per_class * classes;
  Matrix x(1, n);
  std::vector<int> y(n);
  std::vector<std::string> names;
  for (std::size_t c = 0; c < classes; ++c) names.push_back(std::to_string(c));
  for (std::size_t j = 0; j < n; ++j) {
    x(0, j) = static_cast<double>(j);
    y[j] = static_cast<int>(j % classes);
  }
  return Dataset(x, y, names);
}

TEST(DatasetTest, RejectsMissingClassAndOutOfRangeLabel) {
  ExpectError(ErrorKind::kData,
              [] { Dataset(Matrix(1, 2), {0, 0}, {"a", "b"}); });
  ExpectError(ErrorKind::kData,
              [] { Dataset(Matrix(1, 2), {0, 2}, {"a", "b"}); });
  ExpectError(ErrorKind::kData,
              [] { Dataset(Matrix(1, 3), {0, 1}, {"a", "b"}); });
}

TEST(LoadCsvTest, ParsesSmallFile) {
  auto p = WriteTemp("small.csv",
                     "f0,f1,label\n1,2,a\n3,4,a\n5,6.5,b\n-7,8e-1,b\n");
  Dataset ds = LoadCsv(p, "label");
  EXPECT_EQ(ds.dim(), 2u);
  EXPECT_EQ(ds.size(), 4u);
  EXPECT_EQ(ds.num_classes(), 2u);
  EXPECT_EQ(ds.class_names(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(ds.labels(), (std::vector<int>{0, 0, 1, 1}));
  EXPECT_EQ(ds.features(), (Matrix{{1, 3, 5, -7}, {2, 4, 6.5, 0.8}}));
  EXPECT_EQ(ds.feature_names(), (std::vector<std::string>{"f0", "f1"}));
}

TEST(LoadCsvTest, LabelsEncodedByFirstAppearance) {
  auto p = WriteTemp("order.csv", "label,x\nzeta,1\nalpha,2\nzeta,3\n");
  Dataset ds = LoadCsv(p, "label");
  EXPECT_EQ(ds.class_names(), (std::vector<std::string>{"zeta", "alpha"}));
  EXPECT_EQ(ds.labels(), (std::vector<int>{0, 1, 0}));
}

TEST(LoadCsvTest, BlankCellNamesRowAndColumn) {
  auto p = WriteTemp("blank.csv", "f0,f1,label\n1,2,a\n3,,b\n");
  try {
    LoadCsv(p, "label");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kData);
    std::string msg = e.what();
    EXPECT_NE(msg.find("row 3"), std::string::npos) << msg;
    EXPECT_NE(msg.find("'f1'"), std::string::npos) << msg;
  }
}

TEST(LoadCsvTest, OtherMalformedInputs) {
  ExpectError(ErrorKind::kData, [] {
    LoadCsv(WriteTemp("nan.csv", "f0,label\nabc,a\n1,b\n"), "label");
  });
  ExpectError(ErrorKind::kData, [] {
    LoadCsv(WriteTemp("ragged.csv", "f0,label\n1,a,3\n1,b\n"), "label");
  });
  ExpectError(ErrorKind::kData, [] {
    LoadCsv(WriteTemp("nolabel.csv", "f0,f1\n1,2\n"), "label");
  });
  ExpectError(ErrorKind::kData, [] {
    LoadCsv(WriteTemp("oneclass.csv", "f0,label\n1,a\n2,a\n"), "label");
  });
  ExpectError(ErrorKind::kIo,
              [] { LoadCsv("/nonexistent/dir/x.csv", "label"); });
}

TEST(LoadCsvTest, RoundTripIsBitExact) {
  Rng rng(4);
  Matrix x(3, 40);
  std::vector<int> y(40);
  for (std::size_t j = 0; j < 40; ++j) {
    for (std::size_t i = 0; i < 3; ++i) {
      x(i, j) = rng.Normal() * std::pow(10.0, rng.Normal() * 5);
    }
    y[j] = static_cast<int>(j % 3);
  }
  x(0, 0) = std::numeric_limits<double>::denorm_min();
  x(1, 0) = -std::numeric_limits<double>::max();
  x(2, 0) = 0.1;
  Dataset ds(x, y, {"p", "q", "r"});
  fs::path p = fs::path(::testing::TempDir()) / "roundtrip.csv";
  WriteCsv(ds, p);
  Dataset back = LoadCsv(p, "label");
  EXPECT_EQ(back.features(), ds.features());
  EXPECT_EQ(back.labels(), ds.labels());
  EXPECT_EQ(back.class_names(), ds.class_names());
}

void ExpectPartition(const Split& s, std::size_t n) {
  std::vector<std::size_t> all = s.train;
  all.insert(all.end(), s.test.begin(), s.test.end());
  std::sort(all.begin(), all.end());
  ASSERT_EQ(all.size(), n);
  for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(all[i], i);
  EXPECT_TRUE(std::is_sorted(s.train.begin(), s.train.end()));
  EXPECT_TRUE(std::is_sorted(s.test.begin(), s.test.end()));
}

TEST(MakeSplitsTest, TenSampleBalancedExample) {
  Dataset ds = Balanced(5);
  auto splits = MakeSplits(ds, {.repeats = 5, .train_fraction = 0.5});
  ASSERT_EQ(splits.size(), 5u);
  for (const Split& s : splits) {
    ExpectPartition(s, 10);
    EXPECT_EQ(s.train.size(), 5u);
    EXPECT_EQ(s.test.size(), 5u);
    auto y = ds.LabelsAt(s.train);
    auto ones = std::count(y.begin(), y.end(), 1);
    EXPECT_LE(ones, 3);
    EXPECT_LE(5 - ones, 3);
  }
}

TEST(MakeSplitsTest, DeterministicPerSeedAndVariesAcrossRepeats) {
  Dataset ds = Balanced(30);
  SplitPlan plan{.repeats = 5, .train_fraction = 0.5, .seed = 99};
  auto a = MakeSplits(ds, plan);
  auto b = MakeSplits(ds, plan);
  std::set<std::vector<std::size_t>> distinct;
  for (std::size_t r = 0; r < 5; ++r) {
    EXPECT_EQ(a[r].train, b[r].train);
    EXPECT_EQ(a[r].test, b[r].test);
    distinct.insert(a[r].train);
  }
  EXPECT_EQ(distinct.size(), 5u);
  plan.seed = 100;
  EXPECT_NE(MakeSplits(ds, plan)[0].train, a[0].train);
}

TEST(MakeSplitsTest, StratifiedProportionsWithinOneSample) {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t classes = 2 + rng.Below(4);
    std::vector<int> y;
    for (std::size_t c = 0; c < classes; ++c) {
      std::size_t count = 2 + rng.Below(30);
      y.insert(y.end(), count, static_cast<int>(c));
    }
    // Interleave so classes are not contiguous.
    for (std::size_t i = y.size(); i > 1; --i) {
      std::swap(y[i - 1], y[rng.Below(i)]);
    }
    std::vector<std::string> names(classes, "c");
    for (std::size_t c = 0; c < classes; ++c) names[c] += std::to_string(c);
    Dataset ds(Matrix(1, y.size()), y, names);
    double f = 0.2 + 0.6 * rng.Uniform();
    if (f * y.size() < classes) continue;
    auto counts = ds.ClassCounts();
    for (const Split& s : MakeSplits(ds, {.repeats = 3, .train_fraction = f,
                                          .seed = rng.NextU64()})) {
      ExpectPartition(s, y.size());
      auto yt = ds.LabelsAt(s.train);
      for (std::size_t c = 0; c < classes; ++c) {
        double got = static_cast<double>(
            std::count(yt.begin(), yt.end(), static_cast<int>(c)));
        EXPECT_LE(std::abs(got - f * counts[c]), 1.0 + 1e-12);
        EXPECT_GE(got, 1.0);
        EXPECT_LE(got, counts[c] - 1.0);
      }
    }
  }
}

TEST(MakeSplitsTest, UnstratifiedStillPartitions) {
  Dataset ds = Balanced(20, 3);
  for (const Split& s : MakeSplits(ds, {.repeats = 4, .train_fraction = 0.3,
                                        .seed = 1, .stratified = false})) {
    ExpectPartition(s, 60);
    EXPECT_EQ(s.train.size(), 18u);
  }
}

TEST(MakeSplitsTest, Errors) {
  ExpectError(ErrorKind::kData, [] {
    Dataset ds(Matrix(1, 5), {0, 0, 0, 0, 1}, {"a", "b"});
    MakeSplits(ds, {});
  });
  ExpectError(ErrorKind::kConfig,
              [] { MakeSplits(Balanced(5), {.train_fraction = 1.0}); });
  ExpectError(ErrorKind::kConfig,
              [] { MakeSplits(Balanced(5), {.repeats = 0}); });
}

TEST(SynthGaussianTest, ShapeOfTwoGaussianSet) {
  std::vector<double> ma = {0, -1}, mb = {0, 1};
  Dataset ds = SynthGaussian(50, ma, mb, Matrix{{25, 0}, {0, 0.25}}, 3);
  EXPECT_EQ(ds.dim(), 2u);
  EXPECT_EQ(ds.size(), 100u);
  EXPECT_EQ(ds.num_classes(), 2u);
  EXPECT_EQ(ds.ClassCounts(), (std::vector<std::size_t>{50, 50}));
  auto splits = MakeSplits(ds, {.repeats = 5, .train_fraction = 0.5});
  for (const Split& s : splits) {
    EXPECT_EQ(s.train.size(), 50u);
    EXPECT_EQ(s.test.size(), 50u);
  }
}

TEST(SynthGaussianTest, ZeroCovarianceGivesClassMeans) {
  std::vector<double> ma = {1, 2, 3}, mb = {-1, 0, 4};
  Dataset ds = SynthGaussian(7, ma, mb, Matrix(3, 3), 5);
  for (std::size_t j = 0; j < ds.size(); ++j) {
    const auto& m = ds.labels()[j] == 0 ? ma : mb;
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_EQ(ds.features()(i, j), m[i]);
    }
  }
}

TEST(SynthGaussianTest, ClassCovarianceMatchesAtLargeN) {
  std::vector<double> ma = {0, -1}, mb = {0, 1};
  Matrix cov = {{25, 0}, {0, 0.25}};
  Dataset ds = SynthGaussian(5000, ma, mb, cov, 17);
  for (int c = 0; c < 2; ++c) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < ds.size(); ++j) {
      if (ds.labels()[j] == c) idx.push_back(j);
    }
    Matrix s = Covariance(ds.features().SelectCols(idx));
    EXPECT_NEAR(s(0, 0), 25.0, 0.3 * 25.0);
    EXPECT_NEAR(s(1, 1), 0.25, 0.3 * 0.25);
    EXPECT_NEAR(s(0, 1), 0.0, 0.3 * std::sqrt(25.0 * 0.25));
  }
}

TEST(SynthGaussianTest, RejectsIndefiniteCovariance) {
  std::vector<double> m = {0, 0};
  ExpectError(ErrorKind::kSingular, [&] {
    SynthGaussian(5, m, m, Matrix{{1, 2}, {2, 1}}, 0);
  });
  ExpectError(ErrorKind::kSingular, [&] {
    SynthGaussian(5, m, m, Matrix{{1, 0.5}, {0, 1}}, 0);
  });
}

TEST(SynthGaussianTest, SeedDeterminism) {
  std::vector<double> ma = {0, -1}, mb = {0, 1};
  Matrix cov = {{25, 0}, {0, 0.25}};
  EXPECT_EQ(SynthGaussian(20, ma, mb, cov, 9).features(),
            SynthGaussian(20, ma, mb, cov, 9).features());
  EXPECT_NE(SynthGaussian(20, ma, mb, cov, 9).features(),
            SynthGaussian(20, ma, mb, cov, 10).features());
}

TEST(StandardizerTest, ZeroMeanUnitVarianceOnFitData) {
  Rng rng(6);
  Matrix x = testing::RandomMatrix(4, 30, rng, 3.0);
  for (std::size_t j = 0; j < 30; ++j) x(3, j) = 2.0;
  Standardizer st = Standardizer::Fit(x);
  Matrix z = st.Apply(x);
  for (std::size_t i = 0; i < 3; ++i) {
    double m = 0, v = 0;
    for (double e : z.row(i)) m += e;
    m /= 30;
    for (double e : z.row(i)) v += (e - m) * (e - m);
    EXPECT_NEAR(m, 0.0, 1e-12);
    EXPECT_NEAR(v / 30, 1.0, 1e-12);
  }
  EXPECT_EQ(st.scale[3], 1.0);
  for (double e : z.row(3)) EXPECT_EQ(e, 0.0);
}

}  // namespace
}  // namespace misub
