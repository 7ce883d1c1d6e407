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

#ifndef SAEK_EXTRACT_H_
#define SAEK_EXTRACT_H_

#include <string>
#include <string_view>
#include <vector>

#include "saek/analyze.h"
#include "saek/classify.h"
#include "saek/lexicon.h"

namespace saek {

// A nominalized argument phrase.
struct Argument {
  std::string text;  // UTF-8, single-spaced
  ArgumentCategory category = ArgumentCategory::kWhether;
  IntentLabel source_label = IntentLabel::kYesNo;
  // Set for info-seeking imperatives over a quantified object
  // (이번 주 모든 일정): the object noun heads the phrase instead of a
  // wh replacement noun.
  bool quantified_object = false;
  // Engine notes, e.g. "unsupported_contraction" when the past adnominal
  // fell back to stem + 은.
  std::vector<std::string> notes;
};

enum class Tense { kNonPast, kPast, kFuture };

// True when the stem ends in a past-tense coda-ㅆ syllable (왔, 먹었).
// Lexical ㅆ in 있 and the presumptive 겠 are not past.
bool is_past_stem(std::u32string_view stem);

// Adnominal (modifier) form of a predicate stem:
//   past     undo the coda-ㅆ contraction, then attach ㄴ/은 (왔 -> 온)
//   nonpast  attach 는 (있 -> 있는, 살 -> 사는)
//   future   attach ㄹ/을 (오 -> 올, 먹 -> 먹을)
// Throws Error(kUnsupportedContraction) for coda-ㅆ syllables outside the
// lexicon's contraction table, Error(kExtractionFailed) for an empty stem.
std::u32string adnominalize(std::u32string_view stem, Tense tense,
                            const Lexicon &lexicon);

class Extractor {
 public:
  explicit Extractor(const Lexicon &lexicon)
      : lexicon_(lexicon), analyzer_(lexicon) {}

  // Dispatches on the classification label.
  Argument extract(const NormalizedUtterance &u,
                   const Classification &c) const;

  // content + 여부; a verbal head becomes stem+는지, a copula head noun+인지.
  Argument extract_yesno(const NormalizedUtterance &u) const;
  // (A B 중) + adnominal predicate + 것. Throws Error(kOptionsNotFound).
  Argument extract_alternative(const NormalizedUtterance &u) const;
  // content + adnominal predicate + replacement noun.
  Argument extract_wh(const NormalizedUtterance &u,
                      const WhCategory &wh) const;
  // -(하)기 for requirements, -지 않기 for prohibitions.
  Argument extract_command(const NormalizedUtterance &u, Negativeness neg,
                           const NegationProfile &profile) const;

 private:
  enum class PredicateKind { kNone, kVerbal, kLight, kCopula, kAdnominal };

  struct Predicate {
    PredicateKind kind = PredicateKind::kNone;
    std::u32string stem;
    std::size_t begin = 0;  // content lies in tokens before this index
    bool past = false;
    bool future = false;  // volitional/conjectural ㄹ-ending (먹을래)
  };

  Predicate question_predicate(const NormalizedUtterance &u) const;
  Predicate embedded_predicate(const NormalizedUtterance &u,
                               std::size_t cue_begin) const;
  Predicate verbal_predicate(std::u32string stem, std::size_t begin) const;

  std::vector<std::u32string> question_content(const NormalizedUtterance &u,
                                               std::size_t begin,
                                               std::size_t end) const;
  std::vector<std::u32string> command_content(const NormalizedUtterance &u,
                                              std::size_t begin,
                                              std::size_t end,
                                              bool drop_negators,
                                              bool *last_bound = nullptr) const;
  bool skippable(const Eojeol &token) const;
  std::size_t clause_start(const NormalizedUtterance &u,
                           std::size_t end) const;

  std::u32string adnominal_or_fallback(std::u32string_view stem, Tense tense,
                                       Argument &arg) const;
  // `last_bound`: the last part still carries a particle (버스도), so a
  // light 하기 stands apart from it.
  std::u32string nominalize_requirement(std::vector<std::u32string> &parts,
                                        std::u32string stem,
                                        bool last_bound = false) const;

  const Lexicon &lexicon_;
  Analyzer analyzer_;
};

}  // namespace saek

#endif  // SAEK_EXTRACT_H_
