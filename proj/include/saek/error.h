// Copyright 2026 The saek Authors.
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

#ifndef SAEK_ERROR_H_
#define SAEK_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace saek {

enum class ErrorCode {
  kNotHangulSyllable,
  kIndexOutOfRange,
  kUnknownParticle,
  kLexiconFormat,
  kEmptyUtterance,
  kUnclassifiable,
  kWrongSuperType,
  kExtractionFailed,
  kOptionsNotFound,
  kUnsupportedContraction,
  kIoFailure,
  kEmptyCorpus,
  kLengthMismatch,
  kDegenerateMatrix,
  kInvalidMatrix,
};

// Stable snake_case name used in CLI records and validation reports.
std::string_view error_name(ErrorCode code);

// All engine failures are reported as Error carrying a typed code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace saek

#endif  // SAEK_ERROR_H_
