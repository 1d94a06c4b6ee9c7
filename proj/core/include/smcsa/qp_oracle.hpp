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
#include <vector>

#include <Eigen/Dense>

#include "smcsa/constraints.hpp"

namespace smcsa {

struct OracleSolution {
  Eigen::VectorXd coefficients;
  double objective = 0.0;
  std::size_t active_sets_tried = 0;
  std::size_t active_sets_skipped = 0;
};

/// Exact least squares under the ordering constraints of a monotone
/// B-spline (adjacent coefficients ordered in `direction`).
///
/// Enumerates all 2^(J-1) subsets of adjacent pairs held at equality,
/// solves each reduced least-squares problem, and keeps the feasible
/// solution with the smallest residual sum of squares. Rank-deficient
/// subsets are skipped. Requires 2 <= J <= 20.
OracleSolution qp_oracle_monotone_spline(const Eigen::MatrixXd& design, const Eigen::VectorXd& y,
                                         MonotoneDirection direction);

}  // namespace smcsa
