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

#include "smcsa/datasets.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "smcsa/errors.hpp"
#include "smcsa/random.hpp"

namespace smcsa {

void Dataset::validate() const {
  if (x.size() != y.size()) {
    throw InvalidInput("dataset has " + std::to_string(x.size()) + " covariates but " +
                       std::to_string(y.size()) + " responses");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
      throw InvalidInput("dataset point " + std::to_string(i + 1) + " is not finite");
    }
  }
}

double ht0_curve(double x) { return 1.0 + std::tanh(x - 3.0); }

Dataset gen_ht0(std::uint64_t seed) {
  constexpr std::size_t n = 30;
  Engine rng = make_engine(seed);
  Dataset d;
  d.x.resize(n);
  d.y.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    d.x[i] = 6.0 * static_cast<double>(i) / 29.0;
    d.y[i] = ht0_curve(d.x[i]) + 0.3 * standard_normal(rng);
  }
  return d;
}

Dataset contaminate_ht1(const Dataset& ht0) {
  if (ht0.size() < 28) throw InvalidInput("HT1 contamination needs at least 28 points");
  Dataset d = ht0;
  d.y[1] = 2.0;
  d.y[27] = 0.0;
  return d;
}

Dataset gen_lidar_surrogate(std::uint64_t seed) {
  constexpr std::size_t n = 221;
  Engine rng = make_engine(seed);
  Dataset d;
  d.x_label = "range";
  d.y_label = "logratio";
  d.x.resize(n);
  d.y.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double range = 390.0 + 1.5 * static_cast<double>(i);
    const double drop = 1.0 / (1.0 + std::exp(-(range - 600.0) / 20.0));
    const double sd = 0.02 + 0.05 * drop;
    d.x[i] = range;
    d.y[i] = 1.0 - 0.6 * drop + sd * standard_normal(rng);
  }
  const double x_max = *std::max_element(d.x.begin(), d.x.end());
  const double y_max = *std::max_element(d.y.begin(), d.y.end());
  for (double& v : d.x) v /= x_max;
  for (double& v : d.y) v /= y_max;
  return d;
}

ScaleMode parse_scale_mode(const std::string& text) {
  if (text == "none") return ScaleMode::None;
  if (text == "max") return ScaleMode::Max;
  if (text == "absmax") return ScaleMode::AbsMax;
  throw InvalidInput("unknown scale mode '" + text + "' (expected none, max or absmax)");
}

std::string to_string(ScaleMode mode) {
  switch (mode) {
    case ScaleMode::None: return "none";
    case ScaleMode::Max: return "max";
    case ScaleMode::AbsMax: return "absmax";
  }
  return "unknown";
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\"");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\"");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(std::string_view(line).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void apply_scale(std::vector<double>& values, ScaleMode mode, const std::string& what,
                 const std::string& source) {
  if (mode == ScaleMode::None || values.empty()) return;
  double top = 0.0;
  if (mode == ScaleMode::Max) {
    top = *std::max_element(values.begin(), values.end());
  } else {
    for (double v : values) top = std::max(top, std::abs(v));
  }
  if (!(top > 0.0)) {
    throw DataError(source + ": cannot scale column '" + what + "' by its non-positive maximum");
  }
  for (double& v : values) v /= top;
}

}  // namespace

Dataset read_dataset_csv(std::istream& in, const std::string& x_column,
                         const std::string& y_column, ScaleMode x_scale, ScaleMode y_scale,
                         const std::string& source) {
  std::string line;
  if (!std::getline(in, line)) throw DataError(source + ": empty file, expected a header row");
  const std::vector<std::string> header = split_fields(line);
  auto find_column = [&](const std::string& name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw DataError(source + ": no column named '" + name + "'");
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t xi = find_column(x_column);
  const std::size_t yi = find_column(y_column);

  Dataset d;
  d.x_label = x_column;
  d.y_label = y_column;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split_fields(line);
    auto field = [&](std::size_t idx, const std::string& name) {
      if (idx >= fields.size()) {
        throw DataError(source + ":" + std::to_string(line_no) + ": missing column '" + name + "'");
      }
      const std::string& text = fields[idx];
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw DataError(source + ":" + std::to_string(line_no) + ": column '" + name +
                        "': cannot parse '" + text + "' as a number");
      }
      if (!std::isfinite(value)) {
        throw DataError(source + ":" + std::to_string(line_no) + ": column '" + name +
                        "': non-finite value");
      }
      return value;
    };
    d.x.push_back(field(xi, x_column));
    d.y.push_back(field(yi, y_column));
  }
  apply_scale(d.x, x_scale, x_column, source);
  apply_scale(d.y, y_scale, y_column, source);
  return d;
}

Dataset load_dataset_csv(const std::filesystem::path& path, const std::string& x_column,
                         const std::string& y_column, ScaleMode x_scale, ScaleMode y_scale) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open dataset '" + path.string() + "'");
  return read_dataset_csv(in, x_column, y_column, x_scale, y_scale, path.string());
}

void write_dataset_csv(std::ostream& out, const Dataset& data) {
  out << data.x_label << ',' << data.y_label << '\n';
  out << std::setprecision(17);
  for (std::size_t i = 0; i < data.size(); ++i) out << data.x[i] << ',' << data.y[i] << '\n';
}

void write_dataset_csv(const std::filesystem::path& path, const Dataset& data) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  write_dataset_csv(out, data);
  if (!out) throw DataError("write to '" + path.string() + "' failed");
}

}  // namespace smcsa
