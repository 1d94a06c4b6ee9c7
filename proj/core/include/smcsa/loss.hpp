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

#include <functional>
#include <span>
#include <string>

#include "smcsa/dataset.hpp"

namespace smcsa {

struct LossSpec {
  enum class Kind { SquaredError, TukeyBiweight };

  Kind kind = Kind::SquaredError;
  /// Tukey cutoff.
  double c = 1.0;

  static LossSpec squared() { return {Kind::SquaredError, 1.0}; }
  static LossSpec tukey(double c = 1.0) { return {Kind::TukeyBiweight, c}; }
};

std::string to_string(LossSpec::Kind kind);

/// Tukey biweight: (c^2/6)(1 - (1 - (u/c)^2)^3) for |u| <= c, c^2/6 beyond.
double tukey_biweight(double u, double c);

/// Per-residual penalty for the given spec.
double rho(double residual, const LossSpec& spec);

using ModelEvaluator = std::function<double(std::span<const double> theta, double x)>;

/// sum_i rho(y_i - f(x_i; theta)).
double loss(const ModelEvaluator& model, std::span<const double> theta, const Dataset& data,
            const LossSpec& spec);

}  // namespace smcsa
