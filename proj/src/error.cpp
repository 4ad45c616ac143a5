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

#include "ppd/error.hpp"

namespace ppd {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNotPrime: return "NOT_PRIME";
    case ErrorCode::kOverflow: return "OVERFLOW";
    case ErrorCode::kZeroModulus: return "ZERO_MODULUS";
    case ErrorCode::kDimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::kFieldMismatch: return "FIELD_MISMATCH";
    case ErrorCode::kSingular: return "SINGULAR";
    case ErrorCode::kInconsistent: return "INCONSISTENT";
    case ErrorCode::kSingularInput: return "SINGULAR_INPUT";
    case ErrorCode::kInvalidCase: return "INVALID_CASE";
    case ErrorCode::kNotSimilitude: return "NOT_SIMILITUDE";
    case ErrorCode::kUnsupportedCase: return "UNSUPPORTED_CASE";
    case ErrorCode::kNotAllowed: return "E_NOT_ALLOWED";
    case ErrorCode::kCapExceeded: return "CAP_EXCEEDED";
    case ErrorCode::kNoPpdAtD: return "NO_PPD_AT_D";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kValidationError: return "VALIDATION_ERROR";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kUnsupportedDimension: return "UNSUPPORTED_DIMENSION";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace ppd
