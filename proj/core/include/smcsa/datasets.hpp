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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "smcsa/dataset.hpp"

namespace smcsa {

/// Seed used for the reference datasets shipped with the project.
inline constexpr std::uint64_t kCanonicalDataSeed = 2019;

/// 30 points of y = 1 + tanh(x - 3) + e on x_i = 6 (i - 1) / 29, with
/// e ~ N(0, 0.3^2) drawn from the seeded stream.
Dataset gen_ht0(std::uint64_t seed);

/// Noise-free HT0 curve.
double ht0_curve(double x);

/// Copy of an HT0-style dataset with y_2 := 2 and y_28 := 0 (1-based).
/// Throws InvalidInput for fewer than 28 points.
Dataset contaminate_ht1(const Dataset& ht0);

/// Offline stand-in for the 221-point LIDAR data: a decreasing sigmoid in
/// range/log-ratio shape, both axes divided by their maximum, so x spans
/// [390/720, 1] and max(y) = 1.
Dataset gen_lidar_surrogate(std::uint64_t seed);

/// Column scaling on load. Max divides by the largest value and needs it to
/// be positive; AbsMax divides by the largest magnitude and keeps signs.
enum class ScaleMode { None, Max, AbsMax };

ScaleMode parse_scale_mode(const std::string& text);
std::string to_string(ScaleMode mode);

/// Reads a comma-separated file with a header row, taking the named columns.
/// Throws DataError naming the line and column on malformed input.
Dataset load_dataset_csv(const std::filesystem::path& path, const std::string& x_column,
                         const std::string& y_column, ScaleMode x_scale = ScaleMode::None,
                         ScaleMode y_scale = ScaleMode::None);

Dataset read_dataset_csv(std::istream& in, const std::string& x_column,
                         const std::string& y_column, ScaleMode x_scale = ScaleMode::None,
                         ScaleMode y_scale = ScaleMode::None, const std::string& source = "<stream>");

/// Writes "x_label,y_label" then one row per point, 17 significant digits.
void write_dataset_csv(std::ostream& out, const Dataset& data);
void write_dataset_csv(const std::filesystem::path& path, const Dataset& data);

}  // namespace smcsa
