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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "smcsa/optimizer.hpp"

namespace smcsa {

/// One row of a results table: statistics of the final losses of R runs.
struct SummaryRow {
  std::string label;
  std::size_t runs = 0;
  double mean = 0.0;
  double sd = 0.0;
  double min = 0.0;
  double median = 0.0;
  double max = 0.0;
  /// Runs with loss < best * (1 + threshold/100).
  std::size_t conv_count = 0;
  double conv_bound = 0.0;
  double median_wall_time = 0.0;
};

/// Sample statistics (sd with the n-1 divisor, 0 for one run). `best`
/// defaults to the minimum of these runs; pass the best over every
/// algorithm to share one convergence bound across rows.
SummaryRow summarize_runs(std::span<const RunResult> results, double conv_threshold_pct,
                          std::string label = {}, std::optional<double> best = std::nullopt);

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows);
void write_summary_table(std::ostream& out, std::span<const SummaryRow> rows);

}  // namespace smcsa
