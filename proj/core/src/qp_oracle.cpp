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

#include "smcsa/qp_oracle.hpp"

#include <limits>

#include "smcsa/errors.hpp"

namespace smcsa {

OracleSolution qp_oracle_monotone_spline(const Eigen::MatrixXd& design, const Eigen::VectorXd& y,
                                         MonotoneDirection direction) {
  const auto J = static_cast<std::size_t>(design.cols());
  if (J < 2 || J > 20) throw InvalidInput("active-set enumeration supports 2 <= J <= 20");
  if (design.rows() != y.size()) throw InvalidInput("design rows and response length differ");

  const auto ordered = [direction](double a, double b) {
    return direction == MonotoneDirection::Decreasing ? a >= b : a <= b;
  };

  OracleSolution best;
  best.objective = std::numeric_limits<double>::infinity();
  std::vector<Eigen::Index> group(J);
  const std::uint32_t subsets = 1u << (J - 1);

  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    // Bit j ties coefficient j to coefficient j + 1.
    Eigen::Index groups = 0;
    group[0] = 0;
    for (std::size_t j = 1; j < J; ++j) {
      if (!(mask & (1u << (j - 1)))) ++groups;
      group[j] = groups;
    }
    ++groups;

    Eigen::MatrixXd reduced = Eigen::MatrixXd::Zero(design.rows(), groups);
    for (std::size_t j = 0; j < J; ++j) reduced.col(group[j]) += design.col(static_cast<Eigen::Index>(j));

    ++best.active_sets_tried;
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(reduced);
    if (qr.rank() < groups) {
      ++best.active_sets_skipped;
      continue;
    }
    const Eigen::VectorXd reduced_beta = qr.solve(y);
    Eigen::VectorXd beta(static_cast<Eigen::Index>(J));
    for (std::size_t j = 0; j < J; ++j) beta(static_cast<Eigen::Index>(j)) = reduced_beta(group[j]);

    bool feasible = true;
    for (Eigen::Index j = 1; j < beta.size() && feasible; ++j) {
      feasible = ordered(beta(j - 1), beta(j));
    }
    if (!feasible) continue;

    const double rss = (y - design * beta).squaredNorm();
    if (rss < best.objective) {
      best.objective = rss;
      best.coefficients = beta;
    }
  }
  if (best.coefficients.size() == 0) {
    throw SingularError("no active set produced a feasible full-rank solution",
                        std::numeric_limits<double>::infinity());
  }
  return best;
}

}  // namespace smcsa
