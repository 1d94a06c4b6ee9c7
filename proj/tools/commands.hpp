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
#include <optional>
#include <string>

namespace smcsa::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kConfigError = 2,
  kDataError = 3,
  kInfeasible = 4,
  kNumerical = 5,
  kUnsupported = 6,
  kInternal = 7,
};

struct CommonOptions {
  std::filesystem::path config;
  std::optional<std::uint64_t> seed;
  std::filesystem::path out;
  /// Resolved thread count (0 lets OpenMP decide).
  unsigned threads = 1;
  bool quiet = false;
};

int cmd_gendata(const std::string& name, const CommonOptions& options);
int cmd_fit(const CommonOptions& options, const std::string& algorithm_label);
int cmd_bench(const CommonOptions& options);
int cmd_oracle(const CommonOptions& options);

/// Maps an exception escaping a command to its exit code and prints it.
int report_failure(const std::exception& e);

}  // namespace smcsa::cli
