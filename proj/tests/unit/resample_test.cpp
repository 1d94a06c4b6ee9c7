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
#include <numeric>
#include <vector>

#include "oracles.hpp"
#include "smcsa/errors.hpp"
#include "smcsa/resample.hpp"

namespace smcsa {
namespace {

TEST(Weights, FirstIterationUsesBoltzmann) {
  const std::vector<double> losses{1.0, 2.0, 3.0};
  const std::vector<double> w = compute_weights(losses, 1, 0.5, 99.0);
  const double z = std::exp(-2.0) + std::exp(-4.0) + std::exp(-6.0);
  EXPECT_NEAR(w[0], std::exp(-2.0) / z, 1e-15);
  EXPECT_NEAR(w[2], std::exp(-6.0) / z, 1e-15);
  EXPECT_NEAR(std::accumulate(w.begin(), w.end(), 0.0), 1.0, 1e-15);
}

TEST(Weights, LaterIterationsUseTemperatureIncrement) {
  const std::vector<double> losses{0.0, 1.0};
  const std::vector<double> w = compute_weights(losses, 4, 0.5, 1.0);
  // Increment 1/0.5 - 1/1 = 1.
  EXPECT_NEAR(w[1] / w[0], std::exp(-1.0), 1e-14);
}

TEST(Weights, HugeLossesStayFinite) {
  const std::vector<double> losses{1e6, 1e6 + 1.0, 2e6};
  const std::vector<double> w = compute_weights(losses, 1, 1.0, 1.0);
  EXPECT_NEAR(w[0], 1.0 / (1.0 + std::exp(-1.0)), 1e-12);  // 0.7310585786300049
  EXPECT_EQ(w[2], 0.0);
}

TEST(Weights, EqualTemperaturesGiveUniform) {
  const std::vector<double> w = compute_weights(std::vector<double>{3.0, 7.0, 1.0}, 2, 0.4, 0.4);
  for (double v : w) EXPECT_NEAR(v, 1.0 / 3.0, 1e-15);
}

TEST(Weights, RejectsBadInput) {
  EXPECT_THROW(compute_weights(std::vector<double>{}, 1, 1.0, 1.0), InvalidInput);
  EXPECT_THROW(compute_weights(std::vector<double>{1.0}, 0, 1.0, 1.0), InvalidInput);
  EXPECT_THROW(compute_weights(std::vector<double>{1.0}, 1, 0.0, 1.0), InvalidInput);
}

TEST(Resample, MultinomialMatchesReferenceSequence) {
  // Dyadic weights sum to exactly one, so the scaled draw equals the raw one.
  const std::vector<double> weights{0.125, 0.5, 0.25, 0.125};
  Engine rng = make_engine(77);
  EXPECT_EQ(resample_indices(weights, 64, ResamplingScheme::Multinomial, rng),
            testing::reference_multinomial(weights, 64, 77));
}

TEST(Resample, SystematicCountsWithinOne) {
  const std::vector<double> weights{0.1, 0.25, 0.05, 0.3, 0.3};
  Engine rng = make_engine(12);
  for (int rep = 0; rep < 200; ++rep) {
    const auto idx = resample_indices(weights, 40, ResamplingScheme::Systematic, rng);
    std::vector<int> counts(weights.size(), 0);
    for (std::size_t i : idx) ++counts[i];
    for (std::size_t j = 0; j < weights.size(); ++j) {
      EXPECT_LE(std::abs(counts[j] - 40.0 * weights[j]), 1.0 + 1e-9);
    }
    EXPECT_TRUE(std::is_sorted(idx.begin(), idx.end()));
  }
}

TEST(Resample, ZeroWeightNeverSelected) {
  const std::vector<double> weights{0.0, 0.5, 0.0, 0.5, 0.0};
  Engine rng = make_engine(2);
  for (ResamplingScheme s : {ResamplingScheme::Multinomial, ResamplingScheme::Systematic}) {
    for (std::size_t i : resample_indices(weights, 1000, s, rng)) {
      EXPECT_TRUE(i == 1 || i == 3);
    }
  }
}

TEST(Resample, TemplateCopiesStates) {
  const std::vector<int> states{10, 20, 30};
  const std::vector<double> weights{0.0, 1.0, 0.0};
  Engine rng = make_engine(1);
  const std::vector<int> out =
      resample(std::span<const int>(states), std::span<const double>(weights), ResamplingScheme::Multinomial, rng);
  EXPECT_EQ(out, (std::vector<int>{20, 20, 20}));
}

}  // namespace
}  // namespace smcsa
