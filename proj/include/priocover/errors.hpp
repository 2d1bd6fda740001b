// Copyright 2026 The priocover Authors.
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

// Error hierarchy. Every failure mode named by an operation contract has its
// own type so callers (and the CLI exit-code mapping) can dispatch on it.

#ifndef PRIOCOVER_ERRORS_HPP_
#define PRIOCOVER_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace priocover {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The instance (or a derived sub-instance) has no feasible solution.
class Infeasible : public Error {
 public:
  using Error::Error;
};

// Malformed instance data or mismatched dimensions.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Search or iteration limits.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class IterationBudgetExceeded : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

// An input violates a documented precondition of an algorithm.
class AssumptionViolated : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Internal consistency checks: these signal implementation bugs, since the
// underlying mathematics guarantees they never fire.
class InternalCheckFailed : public Error {
 public:
  using Error::Error;
};

class NonIntegralVertex : public InternalCheckFailed {
 public:
  using InternalCheckFailed::InternalCheckFailed;
};

class FractionalInfeasible : public InternalCheckFailed {
 public:
  using InternalCheckFailed::InternalCheckFailed;
};

class CertificateViolated : public InternalCheckFailed {
 public:
  using InternalCheckFailed::InternalCheckFailed;
};

class LemmaViolation : public InternalCheckFailed {
 public:
  using InternalCheckFailed::InternalCheckFailed;
};

#define PRIOCOVER_CHECK(cond, ExcType, msg)                            \
  do {                                                                 \
    if (!(cond)) throw ExcType(std::string(msg) + " [" #cond "]");     \
  } while (0)

}  // namespace priocover

#endif  // PRIOCOVER_ERRORS_HPP_
