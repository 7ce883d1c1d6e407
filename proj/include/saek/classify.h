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

#ifndef SAEK_CLASSIFY_H_
#define SAEK_CLASSIFY_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "saek/analyze.h"
#include "saek/lexicon.h"

namespace saek {

// Dataset label encoding, 0..5 in the published order.
enum class IntentLabel : int {
  kYesNo = 0,
  kAlternative = 1,
  kWh = 2,
  kProhibition = 3,
  kRequirement = 4,
  kStrongRequirement = 5,
};

inline constexpr std::array<IntentLabel, 6> kAllLabels = {
    IntentLabel::kYesNo,       IntentLabel::kAlternative,
    IntentLabel::kWh,          IntentLabel::kProhibition,
    IntentLabel::kRequirement, IntentLabel::kStrongRequirement};

std::string_view label_name(IntentLabel label);
std::optional<IntentLabel> label_from_int(int value);
constexpr int to_int(IntentLabel label) { return static_cast<int>(label); }
constexpr bool is_question(IntentLabel label) { return to_int(label) <= 2; }

enum class QuestionType { kYesNo, kAlternative, kWh };
enum class Negativeness { kProhibition, kRequirement, kStrongRequirement };

std::string_view question_type_name(QuestionType type);
std::string_view negativeness_name(Negativeness neg);

// Projections onto the two three-valued taxonomies. Throw
// Error(kWrongSuperType) when the label belongs to the other super-type.
QuestionType question_type(IntentLabel label);
Negativeness negativeness(IntentLabel label);

// A fired rule and the text it matched, as code point offsets into
// NormalizedUtterance::text.
struct Evidence {
  std::string rule;
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Classification {
  IntentLabel label = IntentLabel::kYesNo;
  std::optional<WhCategory> wh;  // present iff label == kWh
  std::vector<Evidence> evidence;
};

// First wh form in the utterance, skipping vocatives.
struct WhHit {
  std::size_t token = 0;
  WhMatch match;
};
std::optional<WhHit> find_wh(const NormalizedUtterance &u,
                             const Lexicon &lexicon);

// Index of the first token of an info-seeking verb (말해, 알려줘) closing the
// clause, if any. The verb needs something to ask for: a wh word, a
// quantifier or a non-adverb before it.
std::optional<std::size_t> info_verb_begin(const NormalizedUtterance &u,
                                           const Lexicon &lexicon);

// Index of a quantifier adverb (모두, 전부) before `end`.
std::optional<std::size_t> find_quantifier(const NormalizedUtterance &u,
                                           const Lexicon &lexicon,
                                           std::size_t end);

// Rule cascade over analyzer features; the first rule that fires decides.
//
//   1. info-seeking imperative: wh or quantified object -> Wh, else YesNo
//   2. wh-word with an interrogative ending or want-to-know cue -> Wh
//   3. parallel interrogative clauses or 아니면 -> Alternative
//   4. interrogative ending or cue -> YesNo
//   5. 말고 joining a negated clause and an imperative -> StrongRequirement
//   6. 안 + -면 clause + danger predicate (double negation) -> StrongRequirement
//   7. -지 마, or -면 clause + danger predicate -> Prohibition
//   8. imperative, request or wish ending -> Requirement
//
// Throws Error(kUnclassifiable) when nothing fires.
class Classifier {
 public:
  explicit Classifier(const Lexicon &lexicon)
      : lexicon_(lexicon), analyzer_(lexicon) {}

  Classification classify(const NormalizedUtterance &u) const;

 private:
  const Lexicon &lexicon_;
  Analyzer analyzer_;
};

}  // namespace saek

#endif  // SAEK_CLASSIFY_H_
