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

#ifndef SAEK_ENGINE_H_
#define SAEK_ENGINE_H_

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "saek/analyze.h"
#include "saek/classify.h"
#include "saek/error.h"
#include "saek/extract.h"
#include "saek/lexicon.h"

namespace saek {

// Outcome of running one input line through the pipeline.
struct Result {
  std::string text;  // normalized utterance, or the raw line if that failed
  std::optional<Classification> classification;
  std::optional<Argument> argument;
  std::optional<ErrorCode> error;
  std::string error_message;
};

// normalize -> classify -> extract over one lexicon. Typed failures are
// captured in the Result rather than thrown.
class Engine {
 public:
  explicit Engine(const Lexicon &lexicon)
      : lexicon_(lexicon),
        analyzer_(lexicon),
        classifier_(lexicon),
        extractor_(lexicon) {}

  Result classify(std::string_view line) const;
  Result extract(std::string_view line) const;

  const Lexicon &lexicon() const { return lexicon_; }

 private:
  Result run(std::string_view line, bool with_argument) const;

  const Lexicon &lexicon_;
  Analyzer analyzer_;
  Classifier classifier_;
  Extractor extractor_;
};

// Record fields: text, label, label_name, question_type | negativeness,
// wh, evidence[], argument, category, quantified_object, error, message.
nlohmann::json to_json(const Result &r);

// Fixed column order for --format tsv; empty cells for absent fields.
inline constexpr std::string_view kTsvHeader =
    "text\tlabel\tlabel_name\tquestion_type\tnegativeness\targument\tcategory"
    "\terror";
std::string to_tsv(const Result &r);

}  // namespace saek

#endif  // SAEK_ENGINE_H_
