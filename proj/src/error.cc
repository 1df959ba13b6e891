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

#include "lpal/error.h"

namespace lpal {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInstance: return "InvalidInstance";
    case ErrorCode::kInvalidLine: return "InvalidLine";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kNotAStar: return "NotAStar";
    case ErrorCode::kNonzeroDfix: return "NonzeroDfix";
    case ErrorCode::kInfeasibleInput: return "InfeasibleInput";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kBoundTooSmall: return "BoundTooSmall";
    case ErrorCode::kUnequalBounds: return "UnequalBounds";
    case ErrorCode::kDegreeViolation: return "DegreeViolation";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kTimeout: return "Timeout";
    case ErrorCode::kNotDivisible: return "NotDivisible";
    case ErrorCode::kBadPartition: return "BadPartition";
    case ErrorCode::kInvalidSolution: return "InvalidSolution";
    case ErrorCode::kCollisionDetected: return "CollisionDetected";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kNotNice: return "NotNice";
    case ErrorCode::kMethodMismatch: return "MethodMismatch";
  }
  return "Unknown";
}

}  // namespace lpal
