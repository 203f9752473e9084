// Copyright 2026 The Booksum Authors.
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

#ifndef BOOKSUM_ERROR_H_
#define BOOKSUM_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace booksum {

enum class ErrorCode {
  kConfigError,
  kBudgetInvalid,
  kBadLengths,
  kUndecodableInput,
  kExtractionFailed,
  kEmptyDocument,
  kEmptyInput,
  kAllEmpty,
  kDegenerateMatrix,
  kDimensionMismatch,
  kRemoteUnavailable,
};

// All recoverable failures surface as Error. The pipeline tags errors with
// the stage that raised them; the CLI maps codes to process exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

  const std::string& stage() const { return stage_; }
  void set_stage(std::string_view stage) { stage_ = stage; }

  // 2 = configuration error, 3 = input error, 4 = remote service error.
  int exit_code() const {
    switch (code_) {
      case ErrorCode::kConfigError:
      case ErrorCode::kBudgetInvalid:
      case ErrorCode::kBadLengths:
        return 2;
      case ErrorCode::kRemoteUnavailable:
      case ErrorCode::kDimensionMismatch:
        return 4;
      default:
        return 3;
    }
  }

 private:
  ErrorCode code_;
  std::string stage_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kBudgetInvalid: return "BudgetInvalid";
    case ErrorCode::kBadLengths: return "BadLengths";
    case ErrorCode::kUndecodableInput: return "UndecodableInput";
    case ErrorCode::kExtractionFailed: return "ExtractionFailed";
    case ErrorCode::kEmptyDocument: return "EmptyDocument";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kAllEmpty: return "AllEmpty";
    case ErrorCode::kDegenerateMatrix: return "DegenerateMatrix";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kRemoteUnavailable: return "RemoteUnavailable";
  }
  return "Error";
}

}  // namespace booksum

#endif  // BOOKSUM_ERROR_H_
