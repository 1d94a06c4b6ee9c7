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

#include <Eigen/Dense>

namespace smcsa {

/// Least-squares coefficients argmin ||y - A b||^2 via column-pivoted QR.
/// Throws SingularError (carrying a condition estimate) when A is
/// numerically rank deficient.
Eigen::VectorXd ols_estimate(const Eigen::MatrixXd& design, const Eigen::VectorXd& y);

/// Residual sum of squares ||y - A b||^2.
double residual_sum_of_squares(const Eigen::MatrixXd& design, const Eigen::VectorXd& y,
                               const Eigen::VectorXd& coefficients);

}  // namespace smcsa
