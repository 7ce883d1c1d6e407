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

#ifndef SAEK_LEXICON_H_
#define SAEK_LEXICON_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace saek {

enum class WhKind { kWho, kWhat, kWhere, kWhen, kWhy, kHow };

inline constexpr std::array<WhKind, 6> kAllWhKinds = {
    WhKind::kWho, WhKind::kWhat, WhKind::kWhere,
    WhKind::kWhen, WhKind::kWhy, WhKind::kHow};

std::string_view wh_kind_name(WhKind kind);

// A wh category with its replacement nouns, default first.
struct WhCategory {
  WhKind kind = WhKind::kWhat;
  std::vector<std::u32string> nouns;

  const std::u32string &primary_noun() const { return nouns.front(); }
};

enum class ArgumentCategory {
  kWhether,      // 여부
  kChoice,       // 선택
  kPerson,       // 사람
  kMeaning,      // 의미
  kLocation,     // 위치
  kTime,         // 시간
  kReason,       // 이유
  kMethod,       // 방법
  kProhibition,  // 금지
  kRequirement,  // 요구
};

// Korean tag of a category, e.g. "금지".
std::string_view category_tag(ArgumentCategory category);
std::optional<ArgumentCategory> category_from_tag(std::string_view tag);
ArgumentCategory category_for(WhKind kind);
bool is_command_category(ArgumentCategory category);

enum class BatchimCondition { kAny, kBatchim, kOpen, kOpenOrRieul };

struct Particle {
  std::u32string surface;
  BatchimCondition condition = BatchimCondition::kAny;
  // Case particles (이/가, 은/는, 을/를) that command extraction removes.
  bool droppable = false;
};

enum class EndingKind { kInterrogative, kImperative, kDeclarativeCue };

std::string_view ending_kind_name(EndingKind kind);

// How the material in front of an ending is interpreted.
enum class EndingForm {
  kVerbal,     // predicate stem: 왔|니
  kCopula,     // noun + copula: 도착|이야
  kDependent,  // adnominal + 거: 올|거야, 하는 거야
  kLight,      // light verb fused into the ending: 말|해, 확인 바랍니다
  kCue,        // want-to-know cue covering whole tokens: 알고 싶어
};

struct Ending {
  std::u32string surface;  // may contain spaces (multi-token cues)
  EndingKind kind = EndingKind::kInterrogative;
  EndingForm form = EndingForm::kVerbal;
  int coda = 0;             // tail required on the preceding syllable
  bool keep_coda = false;   // true: tail stays on the stem (past ㅆ)
  std::u32string base;      // verb contracted into the ending (줘 -> 주)
  bool informal = false;    // plain 아/어: interrogative when a wh-word is present

  std::size_t token_count() const;
};

// An ending located at the end of a text.
struct EndingMatch {
  Ending entry;
  std::u32string stem;  // text before the ending, with a consumed coda removed
};

enum class ConnectiveKind { kCause, kCondition };

struct Connective {
  std::u32string surface;
  ConnectiveKind kind = ConnectiveKind::kCause;
};

// A wh form found in a token. Offsets are code points within the token.
struct WhMatch {
  WhKind kind = WhKind::kWhat;
  std::size_t begin = 0;
  std::size_t end = 0;
  bool spans_next = false;  // the form continues into the following token (몇 시)
  std::u32string surface;
};

// Immutable correspondence tables driving analysis and extraction.
//
// Built from a line-oriented UTF-8 file: role<TAB>surface<TAB>attributes,
// attributes being key=value pairs separated by ';'. Blank lines and lines
// starting with '#' are ignored. Unknown roles are a load error.
class Lexicon {
 public:
  // Tables compiled into the library from data/lexicon.tsv.
  static const Lexicon &builtin();
  static Lexicon parse(std::string_view content);
  static Lexicon load_file(const std::string &path);

  int version() const { return version_; }

  // Wh forms.
  std::optional<WhMatch> lookup_wh(std::u32string_view token,
                                   std::u32string_view next = {}) const;
  const WhCategory &wh_category(WhKind kind) const;
  bool is_wh_noun(std::u32string_view word) const;

  // Particles.
  const std::vector<Particle> &particles() const { return particles_; }
  const Particle *find_particle(std::u32string_view surface) const;
  // Throws Error(kUnknownParticle) when the particle is not in the table.
  bool josa_valid(char32_t stem_final, std::u32string_view particle) const;
  const std::vector<Particle> &vocatives() const { return vocatives_; }

  // Longest ending at the end of `tokens` (joined by spaces); ties prefer
  // entries with a coda condition. Multi-token endings must cover whole
  // tokens. Verbal and copula endings need a non-empty stem. When nothing
  // matches, a final syllable with the informal ending fused into its vowel
  // (와, 가, 돼) yields an informal imperative whose base is the plain stem.
  std::optional<EndingMatch> match_ending(
      std::span<const std::u32string> tokens) const;
  std::optional<EndingMatch> match_ending(std::u32string_view token) const;
  std::optional<EndingMatch> match_embedded(std::u32string_view token) const;
  bool is_ending_surface(std::u32string_view word) const;

  const std::vector<Connective> &connectives() const { return connectives_; }
  std::optional<Connective> match_connective(std::u32string_view token) const;

  const std::vector<std::u32string> &neg_imperatives() const {
    return neg_imperatives_;
  }
  const std::vector<std::u32string> &neg_anh() const { return neg_anh_; }
  const std::vector<std::u32string> &danger_predicates() const {
    return danger_;
  }
  const std::vector<std::u32string> &info_verbs() const { return info_verbs_; }

  const std::vector<std::u32string> &neg_prefixes() const {
    return neg_prefixes_;
  }
  bool is_neg_prefix(std::u32string_view word) const;
  bool is_neg_exception(std::u32string_view token) const;
  bool is_disjunction(std::u32string_view word) const;
  bool is_coordination(std::u32string_view word) const;
  bool is_light_verb(std::u32string_view word) const;
  bool is_pronoun(std::u32string_view word) const;
  bool is_filler(std::u32string_view word) const;
  bool is_cognition_stem(std::u32string_view stem) const;
  std::optional<std::u32string> determiner_for(
      std::u32string_view quantifier) const;

  // Uncontracted stem for a coda-ㅆ past syllable (했 -> 하, 었 -> "").
  std::optional<std::u32string> uncontract(char32_t syllable) const;
  // Plain stem for a syllable with a fused informal ending (꺼 -> 끄).
  std::optional<std::u32string> unfuse(char32_t syllable) const;

 private:
  Lexicon() = default;

  int version_ = 0;
  std::vector<Particle> particles_;
  std::vector<Particle> vocatives_;
  std::vector<Ending> endings_;
  std::vector<Ending> embedded_;
  std::vector<Connective> connectives_;
  std::vector<std::u32string> disjunctions_;
  std::vector<std::u32string> coordinations_;
  std::vector<std::u32string> neg_prefixes_;
  std::vector<std::u32string> neg_exceptions_;
  std::vector<std::u32string> neg_imperatives_;
  std::vector<std::u32string> neg_anh_;
  std::vector<std::u32string> danger_;
  std::vector<std::u32string> info_verbs_;
  std::vector<std::pair<std::u32string, std::u32string>> quantifiers_;
  std::vector<std::u32string> light_verbs_;
  std::vector<std::u32string> pronouns_;
  std::vector<std::u32string> fillers_;
  std::vector<std::u32string> cognition_;
  std::vector<std::pair<std::u32string, WhKind>> wh_forms_;
  std::array<WhCategory, 6> wh_categories_;
  std::vector<std::pair<char32_t, std::u32string>> contractions_;
  std::vector<std::pair<char32_t, std::u32string>> fused_;
};

}  // namespace saek

#endif  // SAEK_LEXICON_H_
