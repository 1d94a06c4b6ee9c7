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

#include <cmath>
#include <sstream>
#include <vector>

#include "smcsa/errors.hpp"
#include "smcsa/summary.hpp"

namespace smcsa {
namespace {

std::vector<RunResult> runs(std::initializer_list<double> losses) {
  std::vector<RunResult> out;
  double t = 1.0;
  for (double l : losses) {
    RunResult r;
    r.best_loss = l;
    r.wall_time = t;
    t += 1.0;
    out.push_back(r);
  }
  return out;
}

TEST(Summary, SingleRun) {
  const auto r = runs({0.7});
  const SummaryRow s = summarize_runs(r, 1.0, "one");
  EXPECT_EQ(s.label, "one");
  EXPECT_EQ(s.runs, 1u);
  EXPECT_EQ(s.mean, 0.7);
  EXPECT_EQ(s.min, 0.7);
  EXPECT_EQ(s.median, 0.7);
  EXPECT_EQ(s.max, 0.7);
  EXPECT_EQ(s.sd, 0.0);
  EXPECT_EQ(s.conv_count, 1u);
}

TEST(Summary, SampleStatistics) {
  const auto r = runs({1.0, 2.0, 3.0});
  const SummaryRow s = summarize_runs(r, 1.0);
  EXPECT_DOUBLE_EQ(s.mean, 2.0);
  EXPECT_DOUBLE_EQ(s.sd, 1.0);
  EXPECT_EQ(s.median, 2.0);
  EXPECT_EQ(s.conv_count, 1u);
  EXPECT_DOUBLE_EQ(s.conv_bound, 1.01);
  EXPECT_EQ(s.median_wall_time, 2.0);
}

TEST(Summary, EvenCountMedianAndSharedBest) {
  const auto r = runs({0.46, 0.455, 0.5, 0.459});
  const SummaryRow s = summarize_runs(r, 1.0, "x", 0.455);
  EXPECT_DOUBLE_EQ(s.median, 0.4595);
  // 0.455 * 1.01 = 0.45955.
  EXPECT_EQ(s.conv_count, 2u);
  const SummaryRow t = summarize_runs(r, 1.0, "x", 0.3);
  EXPECT_EQ(t.conv_count, 0u);
  EXPECT_LE(s.min, s.median);
  EXPECT_LE(s.median, s.max);
}

TEST(Summary, RejectsEmpty) {
  EXPECT_THROW(summarize_runs(std::vector<RunResult>{}, 1.0), InvalidInput);
}

TEST(Summary, Writers) {
  const auto r = runs({1.0, 2.0});
  const std::vector<SummaryRow> rows{summarize_runs(r, 1.0, "smc")};
  std::ostringstream csv;
  write_summary_csv(csv, rows);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')),
            "algorithm,runs,mean,sd,min,median,max,conv_count,conv_bound,median_time_s");
  EXPECT_NE(csv.str().find("smc,2,1.5,"), std::string::npos);
  std::ostringstream table;
  write_summary_table(table, rows);
  EXPECT_NE(table.str().find("#Conv"), std::string::npos);
  EXPECT_NE(table.str().find("smc"), std::string::npos);
}

}  // namespace
}  // namespace smcsa
