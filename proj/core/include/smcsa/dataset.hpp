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
#include <string>
#include <vector>

namespace smcsa {

/// Paired covariate/response observations. The response is modelled as a
/// regression curve plus noise; the noise variance is never estimated.
struct Dataset {
  std::vector<double> x;
  std::vector<double> y;
  std::string x_label = "x";
  std::string y_label = "y";

  std::size_t size() const noexcept { return x.size(); }

  /// Throws InvalidInput on length mismatch or non-finite values.
  void validate() const;
};

}  // namespace smcsa
