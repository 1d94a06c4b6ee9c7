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

namespace smcsa {

/// Temperature rules. Both scale with the magnitude of the best loss seen so
/// far, so the temperature tracks the scale of the objective.
///
///   Logarithm:   T(k) = |best| / ln(k + 1)
///   Reciprocal:  T(k) = |best| / (1 + alpha (k - 1)^2),  0 < alpha < 1
///
/// The reciprocal rule cools much faster. It does not satisfy the monotone
/// |1/T_k - 1/T_{k-1}| condition that the convergence theory for the
/// logarithm rule relies on.
struct CoolingSchedule {
  enum class Kind { Logarithm, Reciprocal };

  Kind kind = Kind::Reciprocal;
  double alpha = 0.95;
  double floor = 1e-10;

  static CoolingSchedule logarithm() { return {Kind::Logarithm, 0.0}; }
  static CoolingSchedule reciprocal(double alpha) { return {Kind::Reciprocal, alpha}; }

  /// Throws InvalidInput for alpha outside (0, 1) or a non-positive floor.
  void validate() const;
};

/// Temperature at iteration k >= 1 given the best loss observed so far.
/// The result never drops below `schedule.floor`.
double temperature(const CoolingSchedule& schedule, std::size_t k, double best_loss);

std::string to_string(CoolingSchedule::Kind kind);

}  // namespace smcsa
