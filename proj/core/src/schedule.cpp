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

#include "smcsa/schedule.hpp"

#include <algorithm>
#include <cmath>

#include "smcsa/errors.hpp"

namespace smcsa {

void CoolingSchedule::validate() const {
  if (kind == Kind::Reciprocal && !(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidInput("reciprocal schedule needs 0 < alpha < 1, got " + std::to_string(alpha));
  }
  if (!(floor > 0.0)) {
    throw InvalidInput("temperature floor must be positive");
  }
}

double temperature(const CoolingSchedule& schedule, std::size_t k, double best_loss) {
  if (k < 1) throw InvalidInput("temperature: iteration index starts at 1");
  if (!std::isfinite(best_loss)) throw InvalidInput("temperature: best loss is not finite");

  const double scale = std::abs(best_loss);
  const double kk = static_cast<double>(k);
  double t = 0.0;
  switch (schedule.kind) {
    case CoolingSchedule::Kind::Logarithm:
      t = scale / std::log(kk + 1.0);
      break;
    case CoolingSchedule::Kind::Reciprocal:
      t = scale / (1.0 + schedule.alpha * (kk - 1.0) * (kk - 1.0));
      break;
  }
  return std::max(t, schedule.floor);
}

std::string to_string(CoolingSchedule::Kind kind) {
  return kind == CoolingSchedule::Kind::Logarithm ? "logarithm" : "reciprocal";
}

}  // namespace smcsa
