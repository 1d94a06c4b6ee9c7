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
#include <span>
#include <string>
#include <vector>

#include "smcsa/random.hpp"

namespace smcsa {

enum class ResamplingScheme { Multinomial, Systematic };

std::string to_string(ResamplingScheme scheme);

/// Normalized importance weights for iteration k (k >= 1):
///
///   k = 1:  w_j ∝ exp(-loss_j / T_k)
///   k > 1:  w_j ∝ exp(-loss_j (1/T_k - 1/T_prev))
///
/// Exponents are shifted by their maximum before exponentiation.
std::vector<double> compute_weights(std::span<const double> losses, std::size_t k, double t_k,
                                    double t_prev);

/// Draws `count` ancestor indices from normalized `weights`.
std::vector<std::size_t> resample_indices(std::span<const double> weights, std::size_t count,
                                          ResamplingScheme scheme, Engine& rng);

/// Resamples `states` (one per weight) into a new population of the same size.
template <typename State>
std::vector<State> resample(std::span<const State> states, std::span<const double> weights,
                            ResamplingScheme scheme, Engine& rng) {
  std::vector<State> out;
  out.reserve(states.size());
  for (std::size_t i : resample_indices(weights, states.size(), scheme, rng)) {
    out.push_back(states[i]);
  }
  return out;
}

}  // namespace smcsa
