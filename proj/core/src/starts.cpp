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

#include "smcsa/starts.hpp"

#include "smcsa/errors.hpp"
#include "smcsa/random.hpp"

namespace smcsa {

StartSet gen_start_set(const StateVector& origin, const Indicator& indicator, std::size_t count,
                       double scale, std::uint64_t seed, std::size_t max_attempts) {
  if (count < 1) throw InvalidInput("start set needs at least one state");
  if (!(scale > 0.0)) throw InvalidInput("Cauchy scale must be positive");
  if (!origin.is_finite()) throw InvalidInput("start origin has non-finite coordinates");

  StartSet set;
  set.origin = origin;
  set.states.reserve(count);
  Engine rng = make_engine(seed);
  StateVector draw(origin.size());
  for (std::size_t i = 0; i < count; ++i) {
    bool found = false;
    for (std::size_t attempt = 0; attempt < max_attempts && !found; ++attempt) {
      for (std::size_t c = 0; c < origin.size(); ++c) draw[c] = cauchy(rng, origin[c], scale);
      found = draw.is_finite() && indicator(draw.values());
    }
    if (!found) {
      throw InfeasibleError("no feasible start found within " + std::to_string(max_attempts) +
                            " Cauchy draws (state " + std::to_string(i) +
                            "); try a different origin or a larger scale");
    }
    set.states.push_back(draw);
  }
  return set;
}

std::vector<StateVector> tile_states(const std::vector<StateVector>& states, std::size_t count) {
  if (states.empty()) throw InvalidInput("cannot tile an empty start set");
  std::vector<StateVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(states[i % states.size()]);
  return out;
}

}  // namespace smcsa
