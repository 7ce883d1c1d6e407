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

#include "saek/classify.h"

#include "saek/error.h"
#include "saek/text.h"

namespace saek {

namespace {

constexpr std::array<std::string_view, 6> kLabelNames = {
    "yes_no",      "alternative", "wh_question",
    "prohibition", "requirement", "strong_requirement"};

Evidence token_evidence(std::string rule, const NormalizedUtterance &u,
                        std::size_t first, std::size_t last) {
  return Evidence{std::move(rule), u.tokens[first].begin, u.tokens[last].end()};
}

bool asks(const EndingMatch &e, bool wh_present) {
  return e.entry.kind == EndingKind::kInterrogative ||
         e.entry.kind == EndingKind::kDeclarativeCue ||
         (wh_present && e.entry.informal);
}

}  // namespace

std::string_view label_name(IntentLabel label) {
  return kLabelNames[static_cast<std::size_t>(to_int(label))];
}

std::optional<IntentLabel> label_from_int(int value) {
  if (value < 0 || value > 5) return std::nullopt;
  return static_cast<IntentLabel>(value);
}

std::string_view question_type_name(QuestionType type) {
  switch (type) {
    case QuestionType::kYesNo: return "yes_no";
    case QuestionType::kAlternative: return "alternative";
    case QuestionType::kWh: return "wh";
  }
  return "";
}

std::string_view negativeness_name(Negativeness neg) {
  switch (neg) {
    case Negativeness::kProhibition: return "PH";
    case Negativeness::kRequirement: return "REQ";
    case Negativeness::kStrongRequirement: return "SR";
  }
  return "";
}

QuestionType question_type(IntentLabel label) {
  switch (label) {
    case IntentLabel::kYesNo: return QuestionType::kYesNo;
    case IntentLabel::kAlternative: return QuestionType::kAlternative;
    case IntentLabel::kWh: return QuestionType::kWh;
    default: break;
  }
  throw Error(ErrorCode::kWrongSuperType,
              "label " + std::string(label_name(label)) +
                  " is a command and has no question type");
}

Negativeness negativeness(IntentLabel label) {
  switch (label) {
    case IntentLabel::kProhibition: return Negativeness::kProhibition;
    case IntentLabel::kRequirement: return Negativeness::kRequirement;
    case IntentLabel::kStrongRequirement:
      return Negativeness::kStrongRequirement;
    default: break;
  }
  throw Error(ErrorCode::kWrongSuperType,
              "label " + std::string(label_name(label)) +
                  " is a question and has no negativeness");
}

std::optional<WhHit> find_wh(const NormalizedUtterance &u,
                             const Lexicon &lexicon) {
  for (std::size_t i = 0; i <= u.predicate; ++i) {
    const Eojeol &t = u.tokens[i];
    if (t.is_vocative || !t.is_wh) continue;
    std::u32string_view next;
    if (i + 1 < u.tokens.size()) next = u.tokens[i + 1].surface;
    if (auto m = lexicon.lookup_wh(t.surface, next)) return WhHit{i, *m};
  }
  return std::nullopt;
}

std::optional<std::size_t> info_verb_begin(const NormalizedUtterance &u,
                                           const Lexicon &lexicon) {
  const std::span<const Eojeol> clause(u.tokens.data(), u.predicate + 1);
  std::optional<std::size_t> begin;
  for (const std::u32string &verb : lexicon.info_verbs()) {
    if (auto b = match_tail_prefix(clause, verb)) {
      if (!begin || *b < *begin) begin = b;
    }
  }
  if (!begin) return std::nullopt;
  // Something must be asked for. Bare manner adverbs (천천히 말해) only say
  // how to speak.
  for (std::size_t i = *begin; i-- > 0;) {
    const Eojeol &t = u.tokens[i];
    if (t.is_wh || lexicon.determiner_for(t.surface)) return begin;
    if (t.surface.ends_with(U"말고") || lexicon.match_connective(t.surface)) break;
    if (lexicon.is_filler(t.surface) || t.is_vocative) continue;
    if (!t.surface.ends_with(U"히") && !t.surface.ends_with(U"게")) return begin;
  }
  return std::nullopt;
}

std::optional<std::size_t> find_quantifier(const NormalizedUtterance &u,
                                           const Lexicon &lexicon,
                                           std::size_t end) {
  for (std::size_t i = 0; i < end && i < u.tokens.size(); ++i) {
    if (lexicon.determiner_for(u.tokens[i].surface)) return i;
  }
  return std::nullopt;
}

Classification Classifier::classify(const NormalizedUtterance &u) const {
  if (u.tokens.empty()) {
    throw Error(ErrorCode::kEmptyUtterance, "utterance is empty");
  }
  Classification c;
  const std::size_t p = u.predicate;
  const std::optional<EndingMatch> &ending = u.tokens[p].ending;
  const std::optional<WhHit> wh = find_wh(u, lexicon_);

  auto question = [&](IntentLabel label) {
    c.label = label;
    if (label == IntentLabel::kWh) {
      c.wh = lexicon_.wh_category(wh ? wh->match.kind : WhKind::kWhat);
      if (wh) {
        const Eojeol &t = u.tokens[wh->token];
        std::size_t end = t.begin + wh->match.end;
        if (wh->match.spans_next) end = u.tokens[wh->token + 1].end();
        c.evidence.push_back({"wh_word", t.begin + wh->match.begin, end});
      }
    }
    return c;
  };

  // (1) Info-seeking imperatives are questions.
  if (auto info = info_verb_begin(u, lexicon_)) {
    c.evidence.push_back(token_evidence("info_seeking", u, *info, p));
    if (wh) return question(IntentLabel::kWh);
    if (auto q = find_quantifier(u, lexicon_, *info)) {
      c.evidence.push_back(token_evidence("quantified_object", u, *q, *q));
      return question(IntentLabel::kWh);
    }
    return question(IntentLabel::kYesNo);
  }

  // (2) wh-question.
  if (wh && ending && asks(*ending, true)) {
    c.evidence.push_back(token_evidence("wh_question", u, p, p));
    return question(IntentLabel::kWh);
  }

  // (3) Alternative: parallel interrogative clauses or a disjunction. Plain
  // 아/어 clauses repeated in parallel (좋아 … 좋아) also ask for a choice.
  if (ending && (asks(*ending, false) || ending->entry.informal)) {
    for (std::size_t j = 0; j < p && asks(*ending, false); ++j) {
      if (lexicon_.is_disjunction(u.tokens[j].surface)) {
        c.evidence.push_back(token_evidence("disjunction", u, j, j));
        return question(IntentLabel::kAlternative);
      }
    }
    for (std::size_t j = 0; j < p; ++j) {
      const Eojeol &t = u.tokens[j];
      if (t.is_vocative) continue;
      auto other = lexicon_.match_ending(t.surface);
      if (other && other->entry.surface == ending->entry.surface &&
          other->entry.kind == ending->entry.kind) {
        c.evidence.push_back(token_evidence("parallel_clauses", u, j, p));
        return question(IntentLabel::kAlternative);
      }
    }
  }

  // (4) Yes/no question.
  if (ending && asks(*ending, false)) {
    c.evidence.push_back(token_evidence("yes_no", u, p, p));
    return question(IntentLabel::kYesNo);
  }

  const NegationProfile neg = analyzer_.profile_negation(u);

  // (5) Strong requirement: X-지 말고 Y-imperative.
  if (neg.malgo && *neg.malgo > 0 && !neg.suffix_ci_ma && ending &&
      ending->entry.kind == EndingKind::kImperative) {
    c.label = IntentLabel::kStrongRequirement;
    c.evidence.push_back(token_evidence("malgo_coordination", u, *neg.malgo, p));
    return c;
  }

  // (6) Strong requirement by double negation.
  if (neg.preverbal_an && neg.conditional_myen && neg.danger_pred) {
    c.label = IntentLabel::kStrongRequirement;
    c.evidence.push_back(token_evidence("double_negation", u, 0, p));
    return c;
  }

  // (7) Prohibition.
  if (neg.suffix_ci_ma) {
    c.label = IntentLabel::kProhibition;
    c.evidence.push_back(token_evidence("negative_imperative", u, p, p));
    return c;
  }
  if (neg.conditional_myen && neg.danger_pred) {
    c.label = IntentLabel::kProhibition;
    c.evidence.push_back(
        token_evidence("conditional_danger", u, *neg.danger_begin, p));
    return c;
  }

  // Commands are not negated with 안/못, so 안 가요 asks.
  if (ending && ending->entry.informal && p > 0 &&
      lexicon_.is_neg_prefix(u.tokens[p - 1].surface)) {
    c.evidence.push_back(token_evidence("negated_informal", u, p - 1, p));
    return question(IntentLabel::kYesNo);
  }

  // (8) Requirement.
  if (ending && ending->entry.kind == EndingKind::kImperative) {
    c.label = IntentLabel::kRequirement;
    c.evidence.push_back(token_evidence("imperative", u, p, p));
    return c;
  }

  throw Error(ErrorCode::kUnclassifiable,
              "no question or command pattern in: " + u.utf8());
}

}  // namespace saek
