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

#ifndef ORIENT2_ERROR_HPP_
#define ORIENT2_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace orient2 {

enum class ErrorCode {
  kLoopEdge,
  kParallelEdge,
  kVertexOutOfRange,
  kSyntaxError,
  kSameVertex,
  kEmptyGraph,
  kTooLarge,
  kInfeasibleRatio,
  kPreconditionFailed,
  kZeroC,
  kNonIntegral,
  kNegativeSize,
  kNotExtremal,
  kCertificateFailed,
  kBudgetExceeded,
  kExhausted,
  kEmptyGrid,
  kRejectionExhausted,
  kInvalidArgument,
};

// Upper-snake token used in `error: <CODE>: <detail>` lines.
std::string_view code_name(ErrorCode code);

// Every domain failure in the library is reported as an Error carrying a code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace orient2

#endif  // ORIENT2_ERROR_HPP_
