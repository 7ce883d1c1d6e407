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

#include "saek/error.h"

namespace saek {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotHangulSyllable: return "not_hangul_syllable";
    case ErrorCode::kIndexOutOfRange: return "index_out_of_range";
    case ErrorCode::kUnknownParticle: return "unknown_particle";
    case ErrorCode::kLexiconFormat: return "lexicon_format";
    case ErrorCode::kEmptyUtterance: return "empty_utterance";
    case ErrorCode::kUnclassifiable: return "unclassifiable";
    case ErrorCode::kWrongSuperType: return "wrong_super_type";
    case ErrorCode::kExtractionFailed: return "extraction_failed";
    case ErrorCode::kOptionsNotFound: return "options_not_found";
    case ErrorCode::kUnsupportedContraction: return "unsupported_contraction";
    case ErrorCode::kIoFailure: return "io_failure";
    case ErrorCode::kEmptyCorpus: return "empty_corpus";
    case ErrorCode::kLengthMismatch: return "length_mismatch";
    case ErrorCode::kDegenerateMatrix: return "degenerate_matrix";
    case ErrorCode::kInvalidMatrix: return "invalid_matrix";
  }
  return "unknown";
}

}  // namespace saek
