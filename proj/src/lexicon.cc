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

#include "saek/lexicon.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "saek/error.h"
#include "saek/hangul.h"
#include "saek/text.h"

namespace saek {

// Defined in the generated builtin_lexicon.cc.
extern const char *const kBuiltinLexicon;

namespace {

constexpr std::array<std::string_view, 6> kWhNames = {
    "who", "what", "where", "when", "why", "how"};

constexpr std::array<std::string_view, 10> kCategoryTags = {
    "여부", "선택", "사람", "의미", "위치",
    "시간", "이유", "방법", "금지", "요구"};

bool contains(const std::vector<std::u32string> &v, std::u32string_view w) {
  return std::find(v.begin(), v.end(), w) != v.end();
}

[[noreturn]] void format_error(std::size_t line, const std::string &what) {
  throw Error(ErrorCode::kLexiconFormat,
              "lexicon line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    parts.push_back(s.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

using Attributes = std::map<std::string, std::string>;

Attributes parse_attributes(std::string_view field, std::size_t line) {
  Attributes attrs;
  if (field.empty()) return attrs;
  for (std::string_view kv : split(field, ';')) {
    if (kv.empty()) continue;
    std::size_t eq = kv.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      format_error(line, "malformed attribute '" + std::string(kv) + "'");
    }
    attrs.emplace(std::string(kv.substr(0, eq)), std::string(kv.substr(eq + 1)));
  }
  return attrs;
}

std::string attr(const Attributes &attrs, const std::string &key,
                 const std::string &fallback = "") {
  auto it = attrs.find(key);
  return it == attrs.end() ? fallback : it->second;
}

WhKind parse_wh_kind(const std::string &name, std::size_t line) {
  for (std::size_t i = 0; i < kWhNames.size(); ++i) {
    if (kWhNames[i] == name) return kAllWhKinds[i];
  }
  format_error(line, "unknown wh category '" + name + "'");
}

int parse_coda(const std::string &value, std::size_t line) {
  if (value.empty()) return 0;
  std::u32string jamo = to_u32(value);
  std::optional<int> tail;
  if (jamo.size() == 1) tail = hangul::tail_from_compat(jamo[0]);
  if (!tail) format_error(line, "bad coda '" + value + "'");
  return *tail;
}

BatchimCondition parse_condition(const std::string &value, std::size_t line) {
  if (value.empty() || value == "any") return BatchimCondition::kAny;
  if (value == "batchim") return BatchimCondition::kBatchim;
  if (value == "open") return BatchimCondition::kOpen;
  if (value == "open_or_rieul") return BatchimCondition::kOpenOrRieul;
  format_error(line, "bad batchim condition '" + value + "'");
}

Ending parse_ending(const std::u32string &surface, const Attributes &attrs,
                    std::size_t line, bool embedded) {
  Ending e;
  e.surface = surface;
  const std::string kind = attr(attrs, "kind", embedded ? "interrogative" : "");
  if (kind == "interrogative") {
    e.kind = EndingKind::kInterrogative;
  } else if (kind == "imperative") {
    e.kind = EndingKind::kImperative;
  } else if (kind == "cue") {
    e.kind = EndingKind::kDeclarativeCue;
  } else {
    format_error(line, "bad ending kind '" + kind + "'");
  }
  const std::string form = attr(attrs, "form", "verbal");
  if (form == "verbal") {
    e.form = EndingForm::kVerbal;
  } else if (form == "copula") {
    e.form = EndingForm::kCopula;
  } else if (form == "dependent") {
    e.form = EndingForm::kDependent;
  } else if (form == "light") {
    e.form = EndingForm::kLight;
  } else if (form == "cue") {
    e.form = EndingForm::kCue;
  } else {
    format_error(line, "bad ending form '" + form + "'");
  }
  e.coda = parse_coda(attr(attrs, "coda"), line);
  e.keep_coda = attr(attrs, "keep") == "yes";
  e.base = to_u32(attr(attrs, "base"));
  e.informal = attr(attrs, "informal") == "yes";
  return e;
}

// Matches one ending against the end of `tokens`.
std::optional<EndingMatch> try_ending(const Ending &e,
                                      std::span<const std::u32string> tokens) {
  const std::size_t k = e.token_count();
  if (k == 0 || k > tokens.size()) return std::nullopt;
  std::u32string text =
      join(std::vector<std::u32string>(tokens.end() - k, tokens.end()));
  if (!text.ends_with(e.surface)) return std::nullopt;
  std::u32string prefix = text.substr(0, text.size() - e.surface.size());
  if (k > 1 && !prefix.empty()) return std::nullopt;
  if (e.coda != 0) {
    if (prefix.empty() || hangul::tail_of(prefix.back()) != e.coda) {
      return std::nullopt;
    }
    if (!e.keep_coda) {
      prefix.back() = hangul::with_tail(prefix.back(), hangul::kNoTail);
    }
  }
  if (prefix.empty() &&
      (e.form == EndingForm::kVerbal || e.form == EndingForm::kCopula)) {
    return std::nullopt;
  }
  return EndingMatch{e, std::move(prefix)};
}

std::optional<EndingMatch> best_ending(const std::vector<Ending> &table,
                                       std::span<const std::u32string> tokens) {
  std::optional<EndingMatch> best;
  for (const Ending &e : table) {
    std::optional<EndingMatch> m = try_ending(e, tokens);
    if (!m) continue;
    if (!best) {
      best = std::move(m);
      continue;
    }
    const std::size_t len = m->entry.surface.size();
    const std::size_t best_len = best->entry.surface.size();
    if (len > best_len ||
        (len == best_len && m->entry.coda != 0 && best->entry.coda == 0)) {
      best = std::move(m);
    }
  }
  return best;
}

}  // namespace

std::string_view wh_kind_name(WhKind kind) {
  return kWhNames[static_cast<std::size_t>(kind)];
}

std::string_view category_tag(ArgumentCategory category) {
  return kCategoryTags[static_cast<std::size_t>(category)];
}

std::optional<ArgumentCategory> category_from_tag(std::string_view tag) {
  for (std::size_t i = 0; i < kCategoryTags.size(); ++i) {
    if (kCategoryTags[i] == tag) return static_cast<ArgumentCategory>(i);
  }
  return std::nullopt;
}

ArgumentCategory category_for(WhKind kind) {
  switch (kind) {
    case WhKind::kWho: return ArgumentCategory::kPerson;
    case WhKind::kWhat: return ArgumentCategory::kMeaning;
    case WhKind::kWhere: return ArgumentCategory::kLocation;
    case WhKind::kWhen: return ArgumentCategory::kTime;
    case WhKind::kWhy: return ArgumentCategory::kReason;
    case WhKind::kHow: return ArgumentCategory::kMethod;
  }
  return ArgumentCategory::kMeaning;
}

bool is_command_category(ArgumentCategory category) {
  return category == ArgumentCategory::kProhibition ||
         category == ArgumentCategory::kRequirement;
}

std::string_view ending_kind_name(EndingKind kind) {
  switch (kind) {
    case EndingKind::kInterrogative: return "interrogative";
    case EndingKind::kImperative: return "imperative";
    case EndingKind::kDeclarativeCue: return "declarative_cue";
  }
  return "";
}

std::size_t Ending::token_count() const {
  return static_cast<std::size_t>(
             std::count(surface.begin(), surface.end(), U' ')) + 1;
}

const Lexicon &Lexicon::builtin() {
  static const Lexicon lexicon = parse(kBuiltinLexicon);
  return lexicon;
}

Lexicon Lexicon::load_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoFailure, "cannot open lexicon file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

Lexicon Lexicon::parse(std::string_view content) {
  Lexicon lex;
  for (std::size_t i = 0; i < lex.wh_categories_.size(); ++i) {
    lex.wh_categories_[i].kind = kAllWhKinds[i];
  }
  std::set<std::tuple<std::string, std::u32string, int>> seen;

  std::size_t line_no = 0;
  for (std::string_view line : split(content, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string_view> fields = split(line, '\t');
    if (fields.size() < 2 || fields.size() > 3) {
      format_error(line_no, "expected role<TAB>surface<TAB>attributes");
    }
    const std::string role(fields[0]);
    const std::u32string surface = nfc(to_u32(fields[1]));
    const Attributes attrs =
        parse_attributes(fields.size() == 3 ? fields[2] : "", line_no);
    if (surface.empty()) format_error(line_no, "empty surface");

    int coda = 0;
    if (role == "ending" || role == "embedded") {
      coda = parse_coda(attr(attrs, "coda"), line_no);
    }
    if (!seen.emplace(role, surface, coda).second) {
      format_error(line_no, "duplicate " + role + " entry");
    }

    if (role == "version") {
      lex.version_ = std::stoi(std::string(fields[1]));
    } else if (role == "josa" || role == "vocative") {
      Particle p{surface, parse_condition(attr(attrs, "cond"), line_no),
                 attr(attrs, "drop") == "yes"};
      (role == "josa" ? lex.particles_ : lex.vocatives_).push_back(p);
    } else if (role == "ending") {
      lex.endings_.push_back(parse_ending(surface, attrs, line_no, false));
    } else if (role == "embedded") {
      lex.embedded_.push_back(parse_ending(surface, attrs, line_no, true));
    } else if (role == "connective") {
      const std::string kind = attr(attrs, "kind", "cause");
      if (kind != "cause" && kind != "condition") {
        format_error(line_no, "bad connective kind '" + kind + "'");
      }
      lex.connectives_.push_back(
          {surface, kind == "cause" ? ConnectiveKind::kCause
                                    : ConnectiveKind::kCondition});
    } else if (role == "disjunction") {
      lex.disjunctions_.push_back(surface);
    } else if (role == "coordination") {
      lex.coordinations_.push_back(surface);
    } else if (role == "neg_pre") {
      lex.neg_prefixes_.push_back(surface);
    } else if (role == "neg_exception") {
      lex.neg_exceptions_.push_back(surface);
    } else if (role == "neg_imp") {
      lex.neg_imperatives_.push_back(surface);
    } else if (role == "neg_anh") {
      lex.neg_anh_.push_back(surface);
    } else if (role == "danger") {
      lex.danger_.push_back(surface);
    } else if (role == "info_verb") {
      lex.info_verbs_.push_back(surface);
    } else if (role == "quantifier") {
      const std::u32string det = to_u32(attr(attrs, "det"));
      if (det.empty()) format_error(line_no, "quantifier without det=");
      lex.quantifiers_.emplace_back(surface, det);
    } else if (role == "light") {
      lex.light_verbs_.push_back(surface);
    } else if (role == "pronoun") {
      lex.pronouns_.push_back(surface);
    } else if (role == "filler") {
      lex.fillers_.push_back(surface);
    } else if (role == "cognition") {
      lex.cognition_.push_back(surface);
    } else if (role == "wh") {
      lex.wh_forms_.emplace_back(surface,
                                 parse_wh_kind(attr(attrs, "cat"), line_no));
    } else if (role == "wh_noun") {
      WhKind kind = parse_wh_kind(attr(attrs, "cat"), line_no);
      lex.wh_categories_[static_cast<std::size_t>(kind)].nouns.push_back(
          surface);
    } else if (role == "fused") {
      if (surface.size() != 1 || !hangul::is_syllable(surface[0])) {
        format_error(line_no, "fused form must be one syllable");
      }
      const std::u32string stem = to_u32(attr(attrs, "stem"));
      if (stem.empty()) format_error(line_no, "fused form without stem=");
      lex.fused_.emplace_back(surface[0], stem);
    } else if (role == "contraction") {
      if (surface.size() != 1 ||
          hangul::tail_of(surface[0]) != hangul::kTailSsangSiot) {
        format_error(line_no, "contraction must be one coda-ㅆ syllable");
      }
      lex.contractions_.emplace_back(surface[0], to_u32(attr(attrs, "stem")));
    } else {
      format_error(line_no, "unknown role '" + role + "'");
    }
  }

  for (const WhCategory &c : lex.wh_categories_) {
    if (c.nouns.empty()) {
      throw Error(ErrorCode::kLexiconFormat,
                  "lexicon has no replacement noun for wh category '" +
                      std::string(wh_kind_name(c.kind)) + "'");
    }
  }
  for (const Particle &p : lex.particles_) {
    auto same = [&](const Ending &e) { return e.surface == p.surface; };
    if (std::any_of(lex.endings_.begin(), lex.endings_.end(), same) ||
        std::any_of(lex.embedded_.begin(), lex.embedded_.end(), same)) {
      throw Error(ErrorCode::kLexiconFormat,
                  "surface '" + to_utf8(p.surface) +
                      "' is listed both as particle and as ending");
    }
  }
  return lex;
}

std::optional<WhMatch> Lexicon::lookup_wh(std::u32string_view token,
                                          std::u32string_view next) const {
  for (std::size_t pos = 0; pos < token.size(); ++pos) {
    std::optional<WhMatch> best;
    const std::u32string_view rest = token.substr(pos);
    for (const auto &[form, kind] : wh_forms_) {
      std::size_t space = form.find(U' ');
      WhMatch m{kind, pos, 0, false, form};
      if (space == std::u32string::npos) {
        if (!rest.starts_with(form)) continue;
        m.end = pos + form.size();
      } else {
        const std::u32string_view head(form.data(), space);
        const std::u32string_view tail(form.data() + space + 1,
                                       form.size() - space - 1);
        if (rest != head || !next.starts_with(tail)) continue;
        m.end = token.size();
        m.spans_next = true;
      }
      if (!best || m.surface.size() > best->surface.size()) best = m;
    }
    if (best) return best;
  }
  return std::nullopt;
}

const WhCategory &Lexicon::wh_category(WhKind kind) const {
  return wh_categories_[static_cast<std::size_t>(kind)];
}

bool Lexicon::is_wh_noun(std::u32string_view word) const {
  return std::any_of(
      wh_categories_.begin(), wh_categories_.end(),
      [&](const WhCategory &c) { return contains(c.nouns, word); });
}

const Particle *Lexicon::find_particle(std::u32string_view surface) const {
  for (const Particle &p : particles_) {
    if (p.surface == surface) return &p;
  }
  return nullptr;
}

bool Lexicon::josa_valid(char32_t stem_final,
                         std::u32string_view particle) const {
  const Particle *p = find_particle(particle);
  if (p == nullptr) {
    throw Error(ErrorCode::kUnknownParticle,
                "unknown particle: " + to_utf8(particle));
  }
  if (p->condition == BatchimCondition::kAny) return true;
  if (!hangul::is_syllable(stem_final)) return false;
  const int tail = hangul::tail_of(stem_final);
  switch (p->condition) {
    case BatchimCondition::kBatchim: return tail != hangul::kNoTail;
    case BatchimCondition::kOpen: return tail == hangul::kNoTail;
    case BatchimCondition::kOpenOrRieul:
      return tail == hangul::kNoTail || tail == hangul::kTailRieul;
    case BatchimCondition::kAny: break;
  }
  return true;
}

std::optional<EndingMatch> Lexicon::match_ending(
    std::span<const std::u32string> tokens) const {
  if (auto m = best_ending(endings_, tokens)) return m;
  if (tokens.empty() || tokens.back().empty()) return std::nullopt;
  // Informal 아/어 fused into the stem vowel: 와 = 오 + 아, polite 와요.
  const std::u32string &last = tokens.back();
  const bool polite = last.size() > 1 && last.back() == U'요';
  const char32_t fused = last[last.size() - (polite ? 2 : 1)];
  for (const auto &[syllable, stem] : fused_) {
    if (fused != syllable) continue;
    Ending e;
    e.surface = std::u32string(1, syllable);
    if (polite) e.surface += U'요';
    e.kind = EndingKind::kImperative;
    e.form = EndingForm::kVerbal;
    e.base = stem;
    e.informal = true;
    std::u32string rest = last.substr(0, last.size() - e.surface.size());
    return EndingMatch{std::move(e), std::move(rest)};
  }
  return std::nullopt;
}

std::optional<EndingMatch> Lexicon::match_ending(
    std::u32string_view token) const {
  const std::u32string t(token);
  return match_ending(std::span<const std::u32string>(&t, 1));
}

std::optional<EndingMatch> Lexicon::match_embedded(
    std::u32string_view token) const {
  const std::u32string t(token);
  return best_ending(embedded_, std::span<const std::u32string>(&t, 1));
}

bool Lexicon::is_ending_surface(std::u32string_view word) const {
  return std::any_of(endings_.begin(), endings_.end(),
                     [&](const Ending &e) { return e.surface == word; });
}

std::optional<Connective> Lexicon::match_connective(
    std::u32string_view token) const {
  std::optional<Connective> best;
  for (const Connective &c : connectives_) {
    if (token.size() > c.surface.size() && token.ends_with(c.surface) &&
        (!best || c.surface.size() > best->surface.size())) {
      best = c;
    }
  }
  return best;
}

bool Lexicon::is_neg_prefix(std::u32string_view word) const {
  return contains(neg_prefixes_, word);
}

bool Lexicon::is_neg_exception(std::u32string_view token) const {
  return std::any_of(neg_exceptions_.begin(), neg_exceptions_.end(),
                     [&](const std::u32string &e) {
                       return token.starts_with(e);
                     });
}

bool Lexicon::is_disjunction(std::u32string_view word) const {
  return contains(disjunctions_, word);
}

bool Lexicon::is_coordination(std::u32string_view word) const {
  return contains(coordinations_, word);
}

bool Lexicon::is_light_verb(std::u32string_view word) const {
  return contains(light_verbs_, word);
}

bool Lexicon::is_pronoun(std::u32string_view word) const {
  return contains(pronouns_, word);
}

bool Lexicon::is_filler(std::u32string_view word) const {
  return contains(fillers_, word);
}

bool Lexicon::is_cognition_stem(std::u32string_view stem) const {
  return contains(cognition_, stem);
}

std::optional<std::u32string> Lexicon::determiner_for(
    std::u32string_view quantifier) const {
  for (const auto &[q, det] : quantifiers_) {
    if (q == quantifier) return det;
  }
  return std::nullopt;
}

std::optional<std::u32string> Lexicon::uncontract(char32_t syllable) const {
  for (const auto &[syl, stem] : contractions_) {
    if (syl == syllable) return stem;
  }
  return std::nullopt;
}

std::optional<std::u32string> Lexicon::unfuse(char32_t syllable) const {
  for (const auto &[syl, stem] : fused_) {
    if (syl == syllable) return stem;
  }
  return std::nullopt;
}

}  // namespace saek
