// Copyright 2026 The Lotto Precommit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LOTTO_ERROR_HPP_
#define LOTTO_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace lotto {

// Error categories. The C API maps these one-to-one onto lotto_status codes.
enum class ErrorCode {
  kDomain = 1,        // argument outside its mathematical domain
  kDegenerate,        // zero-value battlefield asked for a marginal
  kStructure,         // matched set not a subset of the targets, bad index
  kInfeasible,        // response or commitment spends more than the budget
  kEnumerationCap,    // too many targets for exhaustive enumeration
  kConvergence,       // root finder could not reach the residual tolerance
  kPrecondition,      // operation called outside its stated regime
  kInvalidEquilibrium,
  kIo,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lotto

#endif  // LOTTO_ERROR_HPP_
