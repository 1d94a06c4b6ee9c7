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

#include "invariants.hpp"

namespace smcsa::testing {
namespace {

#define SMCSA_INVARIANT_TEST(Name, fn) \
  TEST(Invariant, Name) {              \
    const CheckResult r = fn();        \
    EXPECT_TRUE(r.ok) << r.detail;     \
  }

SMCSA_INVARIANT_TEST(FeasibilityClosure, check_feasibility_closure)
SMCSA_INVARIANT_TEST(WeightFormula, check_weight_formula)
SMCSA_INVARIANT_TEST(ResamplingChiSquare, check_resampling_chi_square)
SMCSA_INVARIANT_TEST(PartitionOfUnity, check_partition_of_unity)
SMCSA_INVARIANT_TEST(BSplineDerivative, check_bspline_derivative)
SMCSA_INVARIANT_TEST(RootIsolation, check_root_isolation_grid)
SMCSA_INVARIANT_TEST(Nonnegative, check_nonnegative_grid)
SMCSA_INVARIANT_TEST(NoRoots, check_no_roots_grid)
SMCSA_INVARIANT_TEST(RationalIndicator, check_rational_indicator_grid)
SMCSA_INVARIANT_TEST(BSplineIndicator, check_bspline_indicator_grid)
SMCSA_INVARIANT_TEST(AcceptanceRate, check_acceptance_rate)
SMCSA_INVARIANT_TEST(ThreadDeterminism, check_thread_determinism)

}  // namespace
}  // namespace smcsa::testing
