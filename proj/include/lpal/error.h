// Copyright 2026 The LPAL Authors
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

#ifndef LPAL_ERROR_H_
#define LPAL_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace lpal {

enum class ErrorCode {
  kInvalidInstance,
  kInvalidLine,
  kParseError,
  kOverflow,
  kNotAStar,
  kNonzeroDfix,
  kInfeasibleInput,
  kNotATree,
  kBoundTooSmall,
  kUnequalBounds,
  kDegreeViolation,
  kTooLarge,
  kInfeasible,
  kTimeout,
  kNotDivisible,
  kBadPartition,
  kInvalidSolution,
  kCollisionDetected,
  kHypothesisViolated,
  kNotNice,
  kMethodMismatch,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this exception type; `code()`
// distinguishes the cases callers are expected to handle.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lpal

#endif  // LPAL_ERROR_H_
