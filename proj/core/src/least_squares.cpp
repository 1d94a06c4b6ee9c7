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

#include "smcsa/least_squares.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "smcsa/errors.hpp"

namespace smcsa {

Eigen::VectorXd ols_estimate(const Eigen::MatrixXd& design, const Eigen::VectorXd& y) {
  if (design.rows() != y.size()) throw InvalidInput("design rows and response length differ");
  if (design.cols() == 0) throw InvalidInput("design has no columns");

  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  const Eigen::VectorXd diag = qr.matrixQR().diagonal().cwiseAbs();
  const Eigen::Index k = std::min(design.rows(), design.cols());
  const double largest = k > 0 ? diag.head(k).maxCoeff() : 0.0;
  const double smallest = k > 0 ? diag.head(k).minCoeff() : 0.0;
  const double condition =
      smallest > 0.0 ? largest / smallest : std::numeric_limits<double>::infinity();

  if (design.rows() < design.cols() || qr.rank() < design.cols() || condition > 1e12) {
    std::ostringstream msg;
    msg << "least-squares design is rank deficient (rank " << qr.rank() << " of "
        << design.cols() << ", condition estimate " << condition << ")";
    throw SingularError(msg.str(), condition);
  }
  return qr.solve(y);
}

double residual_sum_of_squares(const Eigen::MatrixXd& design, const Eigen::VectorXd& y,
                               const Eigen::VectorXd& coefficients) {
  return (y - design * coefficients).squaredNorm();
}

}  // namespace smcsa
