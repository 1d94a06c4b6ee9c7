// Copyright 2026 The smcsa Authors.
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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <sstream>

#include "smcsa/datasets.hpp"
#include "smcsa/errors.hpp"
#include "smcsa/random.hpp"

namespace smcsa {
namespace {

TEST(Ht0, DesignAndNoiseLayout) {
  const Dataset d = gen_ht0(kCanonicalDataSeed);
  ASSERT_EQ(d.size(), 30u);
  EXPECT_EQ(d.x.front(), 0.0);
  EXPECT_DOUBLE_EQ(d.x.back(), 6.0);
  EXPECT_DOUBLE_EQ(d.x[10], 60.0 / 29.0);
  // Noise is 0.3 times successive standard normals from the seed's stream.
  Engine rng = make_engine(kCanonicalDataSeed);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double noise = 0.3 * standard_normal(rng);
    EXPECT_NEAR(d.y[i], 1.0 + std::tanh(d.x[i] - 3.0) + noise, 1e-14);
  }
  EXPECT_EQ(gen_ht0(3).y, gen_ht0(3).y);
  EXPECT_NE(gen_ht0(3).y, gen_ht0(4).y);
}

TEST(Ht1, ContaminatesTwoPoints) {
  const Dataset clean = gen_ht0(kCanonicalDataSeed);
  const Dataset dirty = contaminate_ht1(clean);
  EXPECT_EQ(dirty.y[1], 2.0);
  EXPECT_EQ(dirty.y[27], 0.0);
  int changed = 0;
  for (std::size_t i = 0; i < clean.size(); ++i) changed += clean.y[i] != dirty.y[i] ? 1 : 0;
  EXPECT_EQ(changed, 2);
  EXPECT_EQ(dirty.x, clean.x);
  EXPECT_THROW(contaminate_ht1(Dataset{{1.0}, {1.0}}), InvalidInput);
}

TEST(LidarSurrogate, ScaledAndDecreasing) {
  const Dataset d = gen_lidar_surrogate(kCanonicalDataSeed);
  ASSERT_EQ(d.size(), 221u);
  EXPECT_EQ(*std::max_element(d.x.begin(), d.x.end()), 1.0);
  EXPECT_EQ(*std::max_element(d.y.begin(), d.y.end()), 1.0);
  EXPECT_NEAR(d.x.front(), 390.0 / 720.0, 1e-15);
  EXPECT_TRUE(std::is_sorted(d.x.begin(), d.x.end()));
  double head = 0.0, tail = 0.0;
  for (int i = 0; i < 30; ++i) {
    head += d.y[static_cast<std::size_t>(i)];
    tail += d.y[d.size() - 1 - static_cast<std::size_t>(i)];
  }
  EXPECT_GT(head - tail, 30 * 0.4);
}

TEST(ScaleMode, Parse) {
  EXPECT_EQ(parse_scale_mode("max"), ScaleMode::Max);
  EXPECT_EQ(parse_scale_mode("none"), ScaleMode::None);
  EXPECT_EQ(parse_scale_mode("absmax"), ScaleMode::AbsMax);
  EXPECT_THROW(parse_scale_mode("zscore"), InvalidInput);
  EXPECT_EQ(to_string(ScaleMode::Max), "max");
}

TEST(Csv, RoundTripIsExact) {
  const Dataset d = gen_ht0(9);
  std::stringstream buf;
  write_dataset_csv(buf, d);
  const Dataset back = read_dataset_csv(buf, "x", "y");
  EXPECT_EQ(back.x, d.x);
  EXPECT_EQ(back.y, d.y);
}

TEST(Csv, SelectsColumnsAndScales) {
  std::istringstream in("id,logratio,range\n1,-0.5,400\n2,-1.0,800\n");
  const Dataset d = read_dataset_csv(in, "range", "logratio", ScaleMode::Max, ScaleMode::None);
  EXPECT_EQ(d.x, (std::vector<double>{0.5, 1.0}));
  EXPECT_EQ(d.y, (std::vector<double>{-0.5, -1.0}));
  EXPECT_EQ(d.x_label, "range");
}

TEST(Csv, ReportsLineAndColumn) {
  std::istringstream in("x,y\n1,2\n3,abc\n");
  try {
    read_dataset_csv(in, "x", "y", ScaleMode::None, ScaleMode::None, "data.csv");
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("data.csv:3"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("'y'"), std::string::npos) << e.what();
  }
}

TEST(Csv, Errors) {
  std::istringstream empty("");
  EXPECT_THROW(read_dataset_csv(empty, "x", "y"), DataError);
  std::istringstream missing("a,b\n1,2\n");
  EXPECT_THROW(read_dataset_csv(missing, "x", "y"), DataError);
  std::istringstream negative("x,y\n-1,2\n-3,4\n");
  EXPECT_THROW(read_dataset_csv(negative, "x", "y", ScaleMode::Max), DataError);
  std::istringstream magnitude("x,y\n-1,2\n-4,4\n");
  EXPECT_EQ(read_dataset_csv(magnitude, "x", "y", ScaleMode::AbsMax).x,
            (std::vector<double>{-0.25, -1.0}));
  EXPECT_THROW(load_dataset_csv("/nonexistent/file.csv", "x", "y"), DataError);
}

TEST(Csv, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "smcsa_datasets_test.csv";
  const Dataset d = gen_lidar_surrogate(1);
  write_dataset_csv(path, d);
  const Dataset back = load_dataset_csv(path, "range", "logratio");
  EXPECT_EQ(back.y, d.y);
  std::filesystem::remove(path);
}

TEST(Dataset, ValidateRejectsMismatch) {
  EXPECT_THROW((Dataset{{1.0, 2.0}, {1.0}}).validate(), InvalidInput);
  EXPECT_THROW((Dataset{{1.0}, {NAN}}).validate(), InvalidInput);
}

}  // namespace
}  // namespace smcsa
