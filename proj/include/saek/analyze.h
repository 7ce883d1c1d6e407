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

#ifndef SAEK_ANALYZE_H_
#define SAEK_ANALYZE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "saek/lexicon.h"

namespace saek {

// A whitespace-delimited token with its stripped particle or ending.
struct Eojeol {
  std::u32string surface;
  std::u32string stem;
  std::optional<std::u32string> particle;
  // Sentence-final ending; set on the predicate token only.
  std::optional<EndingMatch> ending;
  std::size_t begin = 0;  // code point offset in NormalizedUtterance::text
  bool is_vocative = false;
  bool is_wh = false;
  bool is_negator = false;

  std::size_t end() const { return begin + surface.size(); }
};

struct NormalizedUtterance {
  std::string raw;
  std::u32string text;
  std::vector<Eojeol> tokens;
  // Index of the sentence-final predicate token. Trailing vocatives
  // (어디 있니 로비야) and a negated echo (했어 안 했어) follow it.
  std::size_t predicate = 0;

  std::string utf8() const;
};

struct NegationProfile {
  bool preverbal_an = false;      // 안/못 before a predicate
  bool suffix_ci_ma = false;      // -지 마(라)
  bool suffix_ci_anh = false;     // -지 않
  std::optional<std::size_t> malgo;  // token index of 말고, before the last token
  bool danger_pred = false;       // final predicate in the danger table
  bool conditional_myen = false;  // a -면 clause is present
  // Token index where the danger predicate starts, when danger_pred.
  std::optional<std::size_t> danger_begin;
};

// Characters removed by normalization.
inline constexpr std::u32string_view kSentencePunctuation =
    U".?!,…~？！，。‥～";

// NFC, punctuation removal and whitespace collapse. No tokenization.
std::u32string normalize_text(std::string_view raw);

class Analyzer {
 public:
  explicit Analyzer(const Lexicon &lexicon) : lexicon_(lexicon) {}

  // Throws Error(kEmptyUtterance) when nothing remains after cleanup.
  NormalizedUtterance normalize(std::string_view raw) const;

  // Splits the longest valid particle off a token. Single-syllable tokens
  // and tokens whose stem would be empty are returned unchanged.
  Eojeol strip_josa(Eojeol token) const;

  // Sentence-final ending of the last token(s). Multi-token cues such as
  // 알고 싶어 may cover more than one token.
  std::optional<EndingMatch> detect_ending(
      std::span<const Eojeol> tokens) const;

  NegationProfile profile_negation(const NormalizedUtterance &u) const;

  const Lexicon &lexicon() const { return lexicon_; }

 private:
  bool is_vocative_token(const Eojeol &token) const;
  bool is_prefixed_negation(std::u32string_view token) const;

  const Lexicon &lexicon_;
};

// Joins token surfaces with single spaces.
std::u32string join_surfaces(std::span<const Eojeol> tokens);

// Tail matching helper: true when the surfaces of the last tokens, joined by
// spaces, start with `entry` at a token boundary. Returns the index of the
// first covered token.
std::optional<std::size_t> match_tail_prefix(std::span<const Eojeol> tokens,
                                             std::u32string_view entry);

}  // namespace saek

#endif  // SAEK_ANALYZE_H_
