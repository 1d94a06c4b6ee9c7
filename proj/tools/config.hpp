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

// JSON run configuration for the smcsa tool. See docs/config.md for the
// schema; every object rejects keys it does not know.

#include <cstddef>
#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "smcsa/errors.hpp"
#include "smcsa/experiment.hpp"

namespace smcsa::cli {

inline constexpr int kSchemaVersion = 1;

/// Malformed or inconsistent configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  ExperimentSpec spec;
  /// Fit progress cadence in iterations; 0 disables it.
  std::size_t progress_every = 100;
  /// The document as read, echoed into every report.
  nlohmann::ordered_json echo;
};

/// Relative dataset paths resolve against `base_dir`.
RunConfig parse_config(const nlohmann::ordered_json& doc, const std::string& source = "<config>",
                       const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

}  // namespace smcsa::cli
