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

#include <gtest/gtest.h>

#include <cmath>

#include "smcsa/errors.hpp"
#include "smcsa/starts.hpp"

namespace smcsa {
namespace {

const Indicator kAlways = [](std::span<const double>) { return true; };

TEST(Starts, CauchyDrawsCentreOnOrigin) {
  const StartSet set = gen_start_set(StateVector{1.0, -2.0}, kAlways, 10000, 2.0, 17);
  ASSERT_EQ(set.states.size(), 10000u);
  EXPECT_EQ(set.origin, (StateVector{1.0, -2.0}));
  int below = 0;
  int within_scale = 0;
  for (const StateVector& s : set.states) {
    below += s[0] < 1.0 ? 1 : 0;
    within_scale += std::abs(s[1] + 2.0) < 2.0 ? 1 : 0;
  }
  // Both events have probability 1/2; 2.58 sd = 129.
  EXPECT_NEAR(below, 5000, 129);
  EXPECT_NEAR(within_scale, 5000, 129);
}

TEST(Starts, EveryStateSatisfiesIndicator) {
  const Indicator positive = [](std::span<const double> s) { return s[0] > 0.0 && s[1] > s[0]; };
  const StartSet set = gen_start_set(StateVector{1.0, 2.0}, positive, 500, 1.0, 3);
  for (const StateVector& s : set.states) EXPECT_TRUE(positive(s.values()));
}

TEST(Starts, ReproducibleBySeed) {
  const auto a = gen_start_set(StateVector{0.0}, kAlways, 20, 1.0, 5).states;
  const auto b = gen_start_set(StateVector{0.0}, kAlways, 20, 1.0, 5).states;
  const auto c = gen_start_set(StateVector{0.0}, kAlways, 20, 1.0, 6).states;
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(Starts, ExhaustionIsInfeasible) {
  const Indicator never = [](std::span<const double>) { return false; };
  EXPECT_THROW(gen_start_set(StateVector{0.0}, never, 3, 1.0, 1, 50), InfeasibleError);
  EXPECT_THROW(gen_start_set(StateVector{0.0}, kAlways, 0, 1.0, 1), InvalidInput);
  EXPECT_THROW(gen_start_set(StateVector{0.0}, kAlways, 3, 0.0, 1), InvalidInput);
}

TEST(Starts, TilingRepeatsInOrder) {
  const std::vector<StateVector> s{StateVector{1.0}, StateVector{2.0}};
  const auto t = tile_states(s, 5);
  ASSERT_EQ(t.size(), 5u);
  EXPECT_EQ(t[0], s[0]);
  EXPECT_EQ(t[1], s[1]);
  EXPECT_EQ(t[2], s[0]);
  EXPECT_EQ(t[4], s[0]);
  EXPECT_THROW(tile_states({}, 3), InvalidInput);
}

}  // namespace
}  // namespace smcsa
