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

#include "saek/extract.h"

#include <algorithm>
#include <optional>

#include "saek/error.h"
#include "saek/hangul.h"
#include "saek/text.h"

namespace saek {

namespace {

using hangul::kNoTail;
using hangul::kTailNieun;
using hangul::kTailRieul;
using hangul::kTailSsangSiot;

[[noreturn]] void fail(const NormalizedUtterance &u, const char *why) {
  throw Error(ErrorCode::kExtractionFailed,
              std::string(why) + ": " + u.utf8());
}

// Stem + suffix starting with ㄴ (는, 는지); a final ㄹ drops (살 -> 사는).
std::u32string attach_n(std::u32string stem, std::u32string_view suffix) {
  if (!stem.empty() && hangul::tail_of(stem.back()) == kTailRieul) {
    stem.back() = hangul::with_tail(stem.back(), kNoTail);
  }
  return stem + std::u32string(suffix);
}

// Open syllable: add `tail`; ㄹ-final: replace by `rieul_tail` (or keep);
// otherwise append the 으-syllable.
std::u32string attach_coda(std::u32string stem, int tail, int rieul_tail,
                           std::u32string_view eu_form) {
  const char32_t last = stem.back();
  if (!hangul::is_syllable(last)) return stem + std::u32string(eu_form);
  const int current = hangul::tail_of(last);
  if (current == kNoTail) {
    stem.back() = hangul::with_tail(last, tail);
  } else if (current == kTailRieul) {
    stem.back() = hangul::with_tail(last, rieul_tail);
  } else {
    stem += eu_form;
  }
  return stem;
}

// ㄹ/을 endings (먹을래, 올까) carry a prospective reading.
bool is_future(const Ending &e) {
  return (e.coda == kTailRieul && !e.keep_coda) || e.surface.starts_with(U"을");
}

std::u32string join_parts(const std::vector<std::u32string> &parts) {
  return join(parts, U" ");
}

}  // namespace

bool is_past_stem(std::u32string_view stem) {
  if (stem.empty()) return false;
  const char32_t last = stem.back();
  return hangul::tail_of(last) == kTailSsangSiot && last != U'있' &&
         last != U'겠';
}

std::u32string adnominalize(std::u32string_view stem, Tense tense,
                            const Lexicon &lexicon) {
  if (stem.empty()) {
    throw Error(ErrorCode::kExtractionFailed, "empty predicate stem");
  }
  std::u32string base(stem);
  switch (tense) {
    case Tense::kPast: {
      if (hangul::tail_of(base.back()) == kTailSsangSiot) {
        std::optional<std::u32string> plain = lexicon.uncontract(base.back());
        if (!plain) {
          throw Error(ErrorCode::kUnsupportedContraction,
                      "no contraction entry for " + to_utf8(base.substr(base.size() - 1)));
        }
        base.pop_back();
        base += *plain;
        if (base.empty()) {
          throw Error(ErrorCode::kUnsupportedContraction,
                      "past marker without a stem: " + to_utf8(stem));
        }
      }
      return attach_coda(std::move(base), kTailNieun, kTailNieun, U"은");
    }
    case Tense::kNonPast:
      return attach_n(std::move(base), U"는");
    case Tense::kFuture:
      return attach_coda(std::move(base), kTailRieul, kTailRieul, U"을");
  }
  return base;
}

Argument Extractor::extract(const NormalizedUtterance &u,
                            const Classification &c) const {
  switch (c.label) {
    case IntentLabel::kYesNo: return extract_yesno(u);
    case IntentLabel::kAlternative: return extract_alternative(u);
    case IntentLabel::kWh:
      return extract_wh(u, c.wh ? *c.wh : lexicon_.wh_category(WhKind::kWhat));
    case IntentLabel::kProhibition:
    case IntentLabel::kRequirement:
    case IntentLabel::kStrongRequirement:
      return extract_command(u, negativeness(c.label),
                             analyzer_.profile_negation(u));
  }
  fail(u, "unknown label");
}

// --- shared helpers --------------------------------------------------------

Extractor::Predicate Extractor::verbal_predicate(std::u32string stem,
                                                 std::size_t begin) const {
  Predicate p;
  p.begin = begin;
  if (!stem.empty()) {
    const char32_t last = stem.back();
    bool light = lexicon_.is_light_verb(std::u32string(1, last));
    bool past = false;
    if (!light && hangul::tail_of(last) == kTailSsangSiot) {
      auto plain = lexicon_.uncontract(last);
      light = plain && lexicon_.is_light_verb(*plain);
      past = light;
    }
    std::u32string noun = stem.substr(0, stem.size() - 1);
    // 좋아하, 싫어하: the 아/어 form before 하 is not a verbal noun.
    if (light && !noun.empty() && hangul::is_syllable(noun.back())) {
      const hangul::JamoTriple j = hangul::decompose(noun.back());
      if (j.tail == kNoTail &&
          (j.vowel == 0 || j.vowel == 4 || j.vowel == 6 || j.vowel == 14)) {
        light = false;
      }
    }
    if (light) {
      p.kind = PredicateKind::kLight;
      p.stem = std::move(noun);
      p.past = past;
      return p;
    }
  }
  p.kind = stem.empty() ? PredicateKind::kNone : PredicateKind::kVerbal;
  p.past = is_past_stem(stem);
  p.stem = std::move(stem);
  return p;
}

namespace {

// 하는 / 한 / 할 closing an adnominal: returns the verbal noun before it.
std::optional<std::u32string> light_adnominal_noun(std::u32string_view adn) {
  for (std::u32string_view suffix : {U"하는", U"한", U"할"}) {
    if (!adn.ends_with(suffix)) continue;
    std::u32string noun(adn.substr(0, adn.size() - suffix.size()));
    if (!noun.empty() && hangul::is_syllable(noun.back())) {
      const hangul::JamoTriple j = hangul::decompose(noun.back());
      if (j.tail == kNoTail && (j.vowel == 0 || j.vowel == 4)) return std::nullopt;
    }
    return noun;
  }
  return std::nullopt;
}

}  // namespace

Extractor::Predicate Extractor::question_predicate(
    const NormalizedUtterance &u) const {
  const std::size_t p = u.predicate;
  if (auto info = info_verb_begin(u, lexicon_)) {
    return embedded_predicate(u, *info);
  }
  const std::optional<EndingMatch> &e = u.tokens[p].ending;
  if (!e) return Predicate{PredicateKind::kNone, {}, p + 1, false};

  auto dependent = [&](std::u32string adn, std::size_t at) -> Predicate {
    if (adn.empty()) {
      if (at == 0 || u.tokens[at - 1].is_wh) {
        return Predicate{PredicateKind::kNone, {}, at, false};
      }
      --at;
      adn = u.tokens[at].surface;
    }
    if (auto noun = light_adnominal_noun(adn)) {
      Predicate pred{PredicateKind::kLight, *noun, at, false};
      pred.past = adn.back() == U'한';    // 한 거야
      pred.future = adn.back() == U'할';  // 할 거야
      return pred;
    }
    return Predicate{PredicateKind::kAdnominal, adn, at, false};
  };

  switch (e->entry.form) {
    case EndingForm::kCue:
      return embedded_predicate(u, p + 1 - e->entry.token_count());
    case EndingForm::kVerbal: {
      Predicate pred = verbal_predicate(e->stem + e->entry.base, p);
      pred.future = is_future(e->entry);
      return pred;
    }
    case EndingForm::kLight:
      return Predicate{PredicateKind::kLight, e->stem, p, false};
    case EndingForm::kCopula:
      if (u.tokens[p].is_wh) return Predicate{PredicateKind::kNone, {}, p, false};
      return Predicate{PredicateKind::kCopula, e->stem, p, false};
    case EndingForm::kDependent:
      return dependent(e->stem, p);
  }
  return Predicate{PredicateKind::kNone, {}, p, false};
}

Extractor::Predicate Extractor::embedded_predicate(
    const NormalizedUtterance &u, std::size_t cue_begin) const {
  if (cue_begin == 0) return Predicate{PredicateKind::kNone, {}, 0, false};
  const std::size_t at = cue_begin - 1;
  const Eojeol &t = u.tokens[at];
  auto m = lexicon_.match_embedded(t.surface);
  if (!m) return Predicate{PredicateKind::kNone, {}, cue_begin, false};
  switch (m->entry.form) {
    case EndingForm::kCopula:
      if (t.is_wh) return Predicate{PredicateKind::kNone, {}, at, false};
      return Predicate{PredicateKind::kCopula, m->stem, at, false};
    case EndingForm::kDependent:
      if (m->stem.empty()) return Predicate{PredicateKind::kNone, {}, at, false};
      return Predicate{PredicateKind::kAdnominal, m->stem, at, false};
    default: {
      if (t.is_wh) return Predicate{PredicateKind::kNone, {}, at, false};
      Predicate pred = verbal_predicate(m->stem, at);
      pred.future = is_future(m->entry);
      return pred;
    }
  }
}

bool Extractor::skippable(const Eojeol &t) const {
  return t.is_vocative || lexicon_.is_pronoun(t.surface) ||
         lexicon_.is_pronoun(t.stem) || lexicon_.is_filler(t.surface) ||
         lexicon_.is_filler(t.stem) || lexicon_.is_disjunction(t.surface) ||
         lexicon_.is_coordination(t.surface) ||
         lexicon_.is_ending_surface(t.surface) ||
         lexicon_.is_ending_surface(t.stem);
}

std::vector<std::u32string> Extractor::question_content(
    const NormalizedUtterance &u, std::size_t begin, std::size_t end) const {
  std::vector<std::u32string> parts;
  end = std::min(end, u.tokens.size());
  for (std::size_t i = begin; i < end; ++i) {
    const Eojeol &t = u.tokens[i];
    if (t.is_wh || skippable(t) || lexicon_.determiner_for(t.surface)) continue;
    if (!t.stem.empty()) parts.push_back(t.stem);
  }
  return parts;
}

std::vector<std::u32string> Extractor::command_content(
    const NormalizedUtterance &u, std::size_t begin, std::size_t end,
    bool drop_negators, bool *last_bound) const {
  std::vector<std::u32string> parts;
  if (last_bound) *last_bound = false;
  end = std::min(end, u.tokens.size());
  for (std::size_t i = begin; i < end; ++i) {
    const Eojeol &t = u.tokens[i];
    if (skippable(t)) continue;
    if (drop_negators && lexicon_.is_neg_prefix(t.surface)) continue;
    bool drop_particle = false;
    if (t.particle) {
      const Particle *p = lexicon_.find_particle(*t.particle);
      drop_particle = p != nullptr && p->droppable;
    }
    parts.push_back(drop_particle ? t.stem : t.surface);
    if (last_bound) *last_bound = t.particle.has_value() && !drop_particle;
  }
  return parts;
}

std::size_t Extractor::clause_start(const NormalizedUtterance &u,
                                    std::size_t end) const {
  std::size_t start = 0;
  for (std::size_t i = 0; i < end && i < u.tokens.size(); ++i) {
    const std::u32string &s = u.tokens[i].surface;
    auto c = lexicon_.match_connective(s);
    if ((c && c->kind == ConnectiveKind::kCause) ||
        lexicon_.is_coordination(s)) {
      start = i + 1;
    }
  }
  return start;
}

std::u32string Extractor::adnominal_or_fallback(std::u32string_view stem,
                                                Tense tense,
                                                Argument &arg) const {
  try {
    return adnominalize(stem, tense, lexicon_);
  } catch (const Error &e) {
    if (e.code() != ErrorCode::kUnsupportedContraction) throw;
    arg.notes.emplace_back(error_name(e.code()));
    return std::u32string(stem) + U"은";
  }
}

// --- questions -------------------------------------------------------------

Argument Extractor::extract_yesno(const NormalizedUtterance &u) const {
  Argument arg;
  arg.category = ArgumentCategory::kWhether;
  arg.source_label = IntentLabel::kYesNo;

  const Predicate pred = question_predicate(u);
  std::vector<std::u32string> parts = question_content(u, 0, pred.begin);
  switch (pred.kind) {
    case PredicateKind::kNone:
      break;
    case PredicateKind::kVerbal:
      if (pred.future && !pred.past) {
        parts.push_back(attach_coda(pred.stem, kTailRieul, kTailRieul, U"을") + U"지");
      } else {
        parts.push_back(attach_n(pred.stem, U"는지"));
      }
      break;
    case PredicateKind::kLight:
      if (!pred.stem.empty()) parts.push_back(pred.stem);
      break;
    case PredicateKind::kCopula:
      parts.push_back(pred.stem + U"인지");
      break;
    case PredicateKind::kAdnominal:
      parts.push_back(pred.stem);
      parts.push_back(U"것인지");
      break;
  }
  if (parts.empty()) fail(u, "no content for a yes/no argument");
  parts.push_back(U"여부");
  arg.text = to_utf8(join_parts(parts));
  return arg;
}

Argument Extractor::extract_alternative(const NormalizedUtterance &u) const {
  Argument arg;
  arg.category = ArgumentCategory::kChoice;
  arg.source_label = IntentLabel::kAlternative;

  const std::size_t p = u.predicate;
  const std::optional<EndingMatch> &final_ending = u.tokens[p].ending;

  // A clause: option tokens plus an optional predicate.
  struct Clause {
    std::vector<std::u32string> options;
    bool has_predicate = false;
    std::u32string stem;     // verbal stem, or adnominal when `ready`
    bool ready = false;      // stem is already adnominal (올거야)
    bool past = false;
  };
  std::vector<Clause> clauses;
  Clause current;
  std::size_t clause_begin = 0;

  auto close = [&](std::size_t end, std::optional<EndingMatch> ending) {
    std::size_t content_end = end;
    if (ending) {
      current.has_predicate = true;
      switch (ending->entry.form) {
        case EndingForm::kDependent:
          if (!ending->stem.empty()) {
            current.stem = ending->stem;
            current.ready = true;
            content_end = end - 1;
          } else if (end >= 2 && end - 1 > clause_begin) {
            current.stem = u.tokens[end - 2].surface;
            current.ready = true;
            content_end = end - 2;
          } else {
            current.has_predicate = false;
          }
          break;
        case EndingForm::kVerbal:
        case EndingForm::kLight: {
          std::u32string stem = ending->stem + ending->entry.base;
          if (ending->entry.form == EndingForm::kLight) stem += U"하";
          const Predicate vp = verbal_predicate(stem, end - 1);
          content_end = end - 1;
          if (vp.kind == PredicateKind::kLight) {
            current.stem = U"하";
            current.past = vp.past;
            std::vector<std::u32string> before =
                question_content(u, clause_begin, content_end);
            current.options = before;
            if (!vp.stem.empty()) current.options.push_back(vp.stem);
            clauses.push_back(std::move(current));
            current = Clause{};
            return;
          }
          current.stem = vp.stem;
          current.past = vp.past;
          break;
        }
        case EndingForm::kCopula:
          current.has_predicate = false;
          current.options = question_content(u, clause_begin, end - 1);
          if (!ending->stem.empty()) current.options.push_back(ending->stem);
          clauses.push_back(std::move(current));
          current = Clause{};
          return;
        case EndingForm::kCue:
          current.has_predicate = false;
          break;
      }
    }
    current.options = question_content(u, clause_begin, content_end);
    if (!current.options.empty() || current.has_predicate) {
      clauses.push_back(std::move(current));
    }
    current = Clause{};
  };

  for (std::size_t j = 0; j <= p; ++j) {
    const Eojeol &t = u.tokens[j];
    if (lexicon_.is_disjunction(t.surface)) {
      close(j, std::nullopt);
      clause_begin = j + 1;
      continue;
    }
    std::optional<EndingMatch> e;
    if (j == p) {
      e = final_ending;
    } else if (final_ending) {
      e = lexicon_.match_ending(t.surface);
      if (e && (e->entry.surface != final_ending->entry.surface ||
                e->entry.kind != final_ending->entry.kind)) {
        e.reset();
      }
    }
    if (e || j == p) {
      close(j + 1, e);
      clause_begin = j + 1;
    }
  }

  if (clauses.size() < 2) {
    throw Error(ErrorCode::kOptionsNotFound,
                "fewer than two parallel clauses: " + u.utf8());
  }

  const Clause *shared = nullptr;
  bool same = true;
  for (const Clause &c : clauses) {
    if (!c.has_predicate) continue;
    if (shared == nullptr) {
      shared = &c;
    } else if (c.stem != shared->stem || c.ready != shared->ready) {
      same = false;
    }
  }

  std::vector<std::u32string> parts;
  if (same) {
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      if (clauses[i].options.empty()) {
        throw Error(ErrorCode::kOptionsNotFound,
                    "clause without an option phrase: " + u.utf8());
      }
      // Leading material of the first clause is shared context.
      if (i == 0 || clauses[i].options.size() == 1) {
        parts.insert(parts.end(), clauses[i].options.begin(),
                     clauses[i].options.end());
      } else {
        parts.push_back(join_parts(clauses[i].options));
      }
    }
    parts.push_back(U"중");
    if (shared == nullptr) {
      parts.push_back(U"할");
    } else if (shared->ready) {
      parts.push_back(shared->stem);
    } else {
      parts.push_back(adnominal_or_fallback(
          shared->stem, shared->past ? Tense::kPast : Tense::kFuture, arg));
    }
  } else {
    bool past = false;
    for (const Clause &c : clauses) {
      if (c.ready) {
        throw Error(ErrorCode::kOptionsNotFound,
                    "cannot align differing predicates: " + u.utf8());
      }
      std::vector<std::u32string> option = c.options;
      if (c.has_predicate) {
        if (lexicon_.is_light_verb(c.stem) && !option.empty()) {
          option.back() += U"하기";
        } else {
          option.push_back(c.stem + U"기");
        }
        past = past || c.past;
      }
      if (option.empty()) {
        throw Error(ErrorCode::kOptionsNotFound,
                    "clause without an option phrase: " + u.utf8());
      }
      parts.push_back(join_parts(option));
    }
    parts.push_back(U"중");
    parts.push_back(past ? U"한" : U"할");
  }
  parts.push_back(U"것");
  arg.text = to_utf8(join_parts(parts));
  return arg;
}

Argument Extractor::extract_wh(const NormalizedUtterance &u,
                               const WhCategory &wh) const {
  Argument arg;
  arg.category = category_for(wh.kind);
  arg.source_label = IntentLabel::kWh;

  const std::optional<WhHit> hit = find_wh(u, lexicon_);
  if (!hit) {
    // Info-seeking imperative over a quantified object: 일정을 모두 말해.
    const std::optional<std::size_t> info = info_verb_begin(u, lexicon_);
    const std::size_t end = info.value_or(u.predicate);
    const std::optional<std::size_t> q = find_quantifier(u, lexicon_, end);
    std::vector<std::u32string> parts = question_content(u, 0, end);
    if (!q || parts.empty()) fail(u, "no wh-word or quantified object");
    parts.insert(parts.end() - 1,
                 *lexicon_.determiner_for(u.tokens[*q].surface));
    arg.quantified_object = true;
    arg.text = to_utf8(join_parts(parts));
    return arg;
  }

  const Predicate pred = question_predicate(u);
  const std::size_t wh_last = hit->token + (hit->match.spans_next ? 1 : 0);
  std::vector<std::u32string> parts;

  const bool nominal_what =
      wh.kind == WhKind::kWhat &&
      (pred.kind == PredicateKind::kNone ||
       pred.kind == PredicateKind::kCopula ||
       (pred.kind == PredicateKind::kVerbal &&
        lexicon_.is_cognition_stem(pred.stem)));

  // 뭐 as the object of a verbal predicate: 먹을 것, not 먹을 의미.
  const bool what_object =
      wh.kind == WhKind::kWhat && !nominal_what &&
      std::find(wh.nouns.begin(), wh.nouns.end(), U"것") != wh.nouns.end();

  if (nominal_what) {
    parts = question_content(u, 0, hit->token);
    if (parts.empty() && pred.kind == PredicateKind::kCopula) {
      parts.push_back(pred.stem);
    }
  } else {
    const std::size_t from = wh.kind == WhKind::kWhy ? wh_last + 1 : 0;
    parts = question_content(u, from, std::max(from, pred.begin));
    switch (pred.kind) {
      case PredicateKind::kNone:
        break;
      case PredicateKind::kVerbal: {
        Tense tense = Tense::kNonPast;
        if (pred.past) {
          tense = Tense::kPast;
        } else if (pred.future) {
          tense = Tense::kFuture;
        }
        parts.push_back(adnominal_or_fallback(pred.stem, tense, arg));
        break;
      }
      case PredicateKind::kLight:
        if (what_object) {
          // 뭐 숙제 하는 거야 -> 숙제 하는 것; 뭐 신청했어 -> 신청한 것.
          std::u32string verb = u.tokens[pred.begin].is_wh ? U"" : pred.stem;
          verb += pred.past ? U"한" : pred.future ? U"할" : U"하는";
          parts.push_back(verb);
        } else if (!pred.stem.empty() && !u.tokens[pred.begin].is_wh) {
          parts.push_back(pred.stem);
        } else if (parts.empty()) {
          parts.push_back(pred.past ? U"한" : U"하는");
        }
        break;
      case PredicateKind::kCopula:
        parts.push_back(pred.stem);
        break;
      case PredicateKind::kAdnominal:
        parts.push_back(pred.stem);
        break;
    }
  }
  if (parts.empty()) fail(u, "no content for a wh argument");
  parts.emplace_back(what_object ? std::u32string_view(U"것") : wh.primary_noun());
  arg.text = to_utf8(join_parts(parts));
  return arg;
}

// --- commands --------------------------------------------------------------

std::u32string Extractor::nominalize_requirement(
    std::vector<std::u32string> &parts, std::u32string stem,
    bool last_bound) const {
  if (stem.empty() || lexicon_.is_light_verb(stem)) {
    if (parts.empty()) return {};
    if (last_bound || parts.back().ends_with(U"히") ||
        parts.back().ends_with(U"게")) {
      parts.push_back(U"하기");  // adverb + 하: 조용히 하기
    } else if (!parts.back().ends_with(U"기")) {
      parts.back() += U"하기";
    }
    return parts.back();
  }
  parts.push_back(stem + U"기");
  return parts.back();
}

Argument Extractor::extract_command(const NormalizedUtterance &u,
                                    Negativeness neg,
                                    const NegationProfile &profile) const {
  Argument arg;
  arg.category = neg == Negativeness::kProhibition
                     ? ArgumentCategory::kProhibition
                     : ArgumentCategory::kRequirement;
  switch (neg) {
    case Negativeness::kProhibition:
      arg.source_label = IntentLabel::kProhibition;
      break;
    case Negativeness::kRequirement:
      arg.source_label = IntentLabel::kRequirement;
      break;
    case Negativeness::kStrongRequirement:
      arg.source_label = IntentLabel::kStrongRequirement;
      break;
  }

  const std::size_t p = u.predicate;
  std::vector<std::u32string> parts;

  auto from_final_ending = [&](std::size_t start) {
    bool bound = false;
    parts = command_content(u, start, p, false, &bound);
    const std::optional<EndingMatch> &e = u.tokens[p].ending;
    if (!e) fail(u, "command without a predicate ending");
    std::u32string stem;
    if (e->entry.form == EndingForm::kLight) {
      if (!e->stem.empty()) stem = e->stem + U"하";
    } else if (e->entry.form == EndingForm::kVerbal) {
      stem = e->stem + e->entry.base;
      // Benefactive 아/어 주: 열어줘, 닫아 줘, 말해주세요 -> 열, 닫, 말하.
      if (stem.ends_with(U"주")) {
        std::u32string main = stem.substr(0, stem.size() - 1);
        const bool separate = main.empty() && !parts.empty();
        if (separate) main = parts.back();
        if (main.size() > 1 && (main.back() == U'아' || main.back() == U'어')) {
          main.pop_back();
          if (separate) parts.pop_back();
          stem = main;
        } else if (main.size() > 1 && main.back() == U'해') {
          main.back() = U'하';  // 확인해 주세요
          if (separate) parts.pop_back();
          stem = main;
        } else if (auto plain = main.empty() ? std::nullopt
                                             : lexicon_.unfuse(main.back())) {
          main.pop_back();
          if (separate) parts.pop_back();
          stem = main + *plain;
        }
      }
    } else {
      fail(u, "command predicate is not verbal");
    }
    if (nominalize_requirement(parts, stem, bound).empty()) {
      fail(u, "no action to nominalize");
    }
  };

  const bool conditional_route =
      (neg == Negativeness::kStrongRequirement && !profile.malgo) ||
      (neg == Negativeness::kProhibition && !profile.suffix_ci_ma);

  if (neg == Negativeness::kRequirement) {
    from_final_ending(clause_start(u, p));
  } else if (neg == Negativeness::kStrongRequirement && profile.malgo) {
    // Only the required action after 말고 is kept.
    from_final_ending(*profile.malgo + 1);
  } else if (conditional_route) {
    const std::size_t limit = profile.danger_begin.value_or(p);
    std::optional<std::size_t> cond;
    for (std::size_t i = 0; i < limit; ++i) {
      const std::u32string &s = u.tokens[i].surface;
      auto c = lexicon_.match_connective(s);
      if (c && c->kind == ConnectiveKind::kCondition &&
          !lexicon_.is_disjunction(s)) {
        cond = i;
      }
    }
    if (!cond) fail(u, "no conditional clause");
    const bool sr = neg == Negativeness::kStrongRequirement;
    bool bound = false;
    parts = command_content(u, clause_start(u, *cond), *cond, sr, &bound);
    std::u32string verb = u.tokens[*cond].surface;
    if (sr && !lexicon_.is_neg_exception(verb)) {
      for (const std::u32string &prefix : lexicon_.neg_prefixes()) {
        if (verb.size() > prefix.size() && verb.starts_with(prefix)) {
          verb.erase(0, prefix.size());
          break;
        }
      }
    }
    const auto c = lexicon_.match_connective(verb);
    if (c) verb.resize(verb.size() - c->surface.size());
    if (verb.empty()) fail(u, "empty conditional predicate");
    if (sr) {
      if (nominalize_requirement(parts, verb, bound).empty()) {
        fail(u, "no action to nominalize");
      }
    } else {
      parts.push_back(verb + U"지 않기");
    }
  } else {
    // -지 마: the prohibited action is the clause ending in 지.
    std::u32string_view entry;
    const std::u32string text =
        join_surfaces(std::span<const Eojeol>(u.tokens.data(), p + 1));
    for (const std::u32string &e : lexicon_.neg_imperatives()) {
      if (text.size() > e.size() && text.ends_with(e) &&
          text[text.size() - e.size() - 1] != U' ' && e.size() > entry.size()) {
        entry = e;
      }
    }
    if (entry.empty()) fail(u, "no negative imperative");
    const std::size_t spaces =
        static_cast<std::size_t>(std::count(entry.begin(), entry.end(), U' '));
    const std::size_t k = p - spaces;
    const std::u32string_view head = entry.substr(0, entry.find(U' '));
    const std::u32string &verb_token = u.tokens[k].surface;
    const std::u32string verb =
        verb_token.substr(0, verb_token.size() - head.size());
    if (verb.empty()) fail(u, "empty prohibited action");
    parts = command_content(u, clause_start(u, k), k, false);
    parts.push_back(verb + U"지 않기");
  }

  if (parts.empty()) fail(u, "no content for a command argument");
  arg.text = to_utf8(join_parts(parts));
  return arg;
}

}  // namespace saek
