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

#include "smcsa/summary.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "smcsa/errors.hpp"

namespace smcsa {

namespace {

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

SummaryRow summarize_runs(std::span<const RunResult> results, double conv_threshold_pct,
                          std::string label, std::optional<double> best) {
  if (results.empty()) throw InvalidInput("summary needs at least one run");
  std::vector<double> losses;
  std::vector<double> times;
  for (const RunResult& r : results) {
    losses.push_back(r.best_loss);
    times.push_back(r.wall_time);
  }

  SummaryRow row;
  row.label = std::move(label);
  row.runs = losses.size();
  const double n = static_cast<double>(losses.size());
  double sum = 0.0;
  for (double l : losses) sum += l;
  row.mean = sum / n;
  double ss = 0.0;
  for (double l : losses) ss += (l - row.mean) * (l - row.mean);
  row.sd = losses.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  row.min = *std::min_element(losses.begin(), losses.end());
  row.max = *std::max_element(losses.begin(), losses.end());
  row.median = median_of(losses);
  row.median_wall_time = median_of(times);

  const double reference = best.value_or(row.min);
  row.conv_bound = reference * (1.0 + conv_threshold_pct / 100.0);
  row.conv_count = static_cast<std::size_t>(std::count_if(
      losses.begin(), losses.end(), [&](double l) { return l < row.conv_bound; }));
  return row;
}

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows) {
  out << "algorithm,runs,mean,sd,min,median,max,conv_count,conv_bound,median_time_s\n";
  out << std::setprecision(10);
  for (const SummaryRow& r : rows) {
    out << r.label << ',' << r.runs << ',' << r.mean << ',' << r.sd << ',' << r.min << ','
        << r.median << ',' << r.max << ',' << r.conv_count << ',' << r.conv_bound << ','
        << r.median_wall_time << '\n';
  }
}

void write_summary_table(std::ostream& out, std::span<const SummaryRow> rows) {
  std::size_t width = 10;
  for (const SummaryRow& r : rows) width = std::max(width, r.label.size());
  std::ostringstream s;
  s << std::left << std::setw(static_cast<int>(width)) << "Algorithm" << std::right;
  for (const char* h : {"Mean", "SD", "Min", "Med", "Max"}) s << std::setw(10) << h;
  s << std::setw(7) << "#Conv" << std::setw(10) << "Time" << '\n';
  for (const SummaryRow& r : rows) {
    s << std::left << std::setw(static_cast<int>(width)) << r.label << std::right << std::fixed
      << std::setprecision(4);
    for (double v : {r.mean, r.sd, r.min, r.median, r.max}) s << std::setw(10) << v;
    s << std::setw(7) << r.conv_count << std::setw(10) << std::setprecision(2)
      << r.median_wall_time << '\n';
  }
  out << s.str();
}

}  // namespace smcsa
