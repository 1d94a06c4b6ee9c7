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

#include <stdexcept>
#include <string>

namespace smcsa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied argument violates a documented precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Evaluation point outside the valid domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A rational function was evaluated at (or numerically at) a pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A least-squares system is rank deficient.
class SingularError : public Error {
 public:
  SingularError(const std::string& what, double condition_estimate)
      : Error(what), condition_estimate_(condition_estimate) {}

  double condition_estimate() const noexcept { return condition_estimate_; }

 private:
  double condition_estimate_;
};

/// No feasible state could be produced within the attempt budget.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Reading or parsing external data failed.
class DataError : public Error {
 public:
  using Error::Error;
};

/// The requested operation does not apply to the configured problem.
class UnsupportedProblem : public Error {
 public:
  using Error::Error;
};

}  // namespace smcsa
