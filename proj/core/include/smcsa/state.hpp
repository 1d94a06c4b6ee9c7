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
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace smcsa {

/// A point in the search space: candidate regression coefficients.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::size_t dimension, double fill = 0.0) : values_(dimension, fill) {}
  explicit StateVector(std::vector<double> values) : values_(std::move(values)) {}
  StateVector(std::initializer_list<double> values) : values_(values) {}

  std::size_t size() const noexcept { return values_.size(); }
  double& operator[](std::size_t i) { return values_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }

  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }
  const std::vector<double>& vector() const noexcept { return values_; }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  /// True when every coordinate is finite.
  bool is_finite() const noexcept;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  std::vector<double> values_;
};

using LossFunction = std::function<double(std::span<const double>)>;
using Indicator = std::function<bool(std::span<const double>)>;

/// Objective, feasibility predicate and dimension of one optimization task.
///
/// The indicator is the only view the optimizer has of the feasible set; it
/// must be deterministic, and the loss must be finite wherever the indicator
/// holds. Both are called concurrently from worker threads.
struct Problem {
  std::size_t dimension = 0;
  LossFunction loss;
  Indicator indicator;

  double evaluate(const StateVector& state) const { return loss(state.values()); }
  bool feasible(const StateVector& state) const {
    return state.is_finite() && indicator(state.values());
  }
};

/// A state with its cached loss and importance weight.
struct Particle {
  StateVector state;
  double loss = 0.0;
  double weight = 0.0;
};

}  // namespace smcsa
