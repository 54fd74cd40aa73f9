// Copyright 2026 The orient2 Authors
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

#include "orient2/error.hpp"

namespace orient2 {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLoopEdge: return "LOOP_EDGE";
    case ErrorCode::kParallelEdge: return "PARALLEL_EDGE";
    case ErrorCode::kVertexOutOfRange: return "VERTEX_OUT_OF_RANGE";
    case ErrorCode::kSyntaxError: return "SYNTAX_ERROR";
    case ErrorCode::kSameVertex: return "SAME_VERTEX";
    case ErrorCode::kEmptyGraph: return "EMPTY_GRAPH";
    case ErrorCode::kTooLarge: return "TOO_LARGE";
    case ErrorCode::kInfeasibleRatio: return "INFEASIBLE_RATIO";
    case ErrorCode::kPreconditionFailed: return "PRECONDITION_FAILED";
    case ErrorCode::kZeroC: return "ZERO_C";
    case ErrorCode::kNonIntegral: return "NON_INTEGRAL";
    case ErrorCode::kNegativeSize: return "NEGATIVE_SIZE";
    case ErrorCode::kNotExtremal: return "NOT_EXTREMAL";
    case ErrorCode::kCertificateFailed: return "CERTIFICATE_FAILED";
    case ErrorCode::kBudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::kExhausted: return "EXHAUSTED";
    case ErrorCode::kEmptyGrid: return "EMPTY_GRID";
    case ErrorCode::kRejectionExhausted: return "REJECTION_EXHAUSTED";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

}  // namespace orient2
