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
#include <cstdint>
#include <vector>

#include "smcsa/state.hpp"

namespace smcsa {

/// Feasible starting states scattered around a crude estimate.
struct StartSet {
  std::vector<StateVector> states;
  StateVector origin;
};

/// Draws `count` states; each is the first feasible vector among repeated
/// component-wise Cauchy(origin_i, scale) draws. Throws InfeasibleError when
/// a state needs more than `max_attempts` draws.
StartSet gen_start_set(const StateVector& origin, const Indicator& indicator, std::size_t count,
                       double scale, std::uint64_t seed, std::size_t max_attempts = 100000);

/// Repeats the whole set in order until it holds `count` states:
/// s_0..s_{m-1}, s_0..s_{m-1}, ...
std::vector<StateVector> tile_states(const std::vector<StateVector>& states, std::size_t count);

}  // namespace smcsa
