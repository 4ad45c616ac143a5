// Copyright 2026 The ppdrec Authors
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

#ifndef PPD_ERROR_HPP
#define PPD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ppd {

enum class ErrorCode {
  kNotPrime,
  kOverflow,
  kZeroModulus,
  kDimensionMismatch,
  kFieldMismatch,
  kSingular,
  kInconsistent,
  kSingularInput,
  kInvalidCase,
  kNotSimilitude,
  kUnsupportedCase,
  kNotAllowed,
  kCapExceeded,
  kNoPpdAtD,
  kParseError,
  kValidationError,
  kInvalidArgument,
  kUnsupportedDimension,
};

const char* to_string(ErrorCode code) noexcept;

// All library failures surface as ppd::Error carrying a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ppd

#endif  // PPD_ERROR_HPP
