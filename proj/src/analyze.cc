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

#include "saek/analyze.h"

#include <algorithm>

#include "saek/error.h"
#include "saek/hangul.h"
#include "saek/text.h"

namespace saek {

namespace {

std::vector<std::u32string> surfaces(std::span<const Eojeol> tokens) {
  std::vector<std::u32string> out;
  out.reserve(tokens.size());
  for (const Eojeol &t : tokens) out.push_back(t.surface);
  return out;
}

}  // namespace

std::string NormalizedUtterance::utf8() const { return to_utf8(text); }

std::u32string join_surfaces(std::span<const Eojeol> tokens) {
  return join(surfaces(tokens));
}

std::optional<std::size_t> match_tail_prefix(std::span<const Eojeol> tokens,
                                             std::u32string_view entry) {
  const std::size_t k =
      static_cast<std::size_t>(std::count(entry.begin(), entry.end(), U' ')) +
      1;
  if (k > tokens.size()) return std::nullopt;
  const std::u32string tail = join_surfaces(tokens.subspan(tokens.size() - k));
  if (!tail.starts_with(entry)) return std::nullopt;
  return tokens.size() - k;
}

std::u32string normalize_text(std::string_view raw) {
  std::u32string text = nfc(to_u32(raw));
  for (char32_t &c : text) {
    if (kSentencePunctuation.find(c) != std::u32string_view::npos) c = U' ';
  }
  return collapse_whitespace(text);
}

NormalizedUtterance Analyzer::normalize(std::string_view raw) const {
  NormalizedUtterance u;
  u.raw = std::string(raw);
  u.text = normalize_text(raw);
  if (u.text.empty()) {
    throw Error(ErrorCode::kEmptyUtterance, "utterance is empty");
  }

  std::size_t offset = 0;
  for (std::u32string &word : split_spaces(u.text)) {
    Eojeol token;
    token.begin = offset;
    offset += word.size() + 1;
    token.stem = word;
    token.surface = std::move(word);
    u.tokens.push_back(std::move(token));
  }

  std::vector<Eojeol> &tokens = u.tokens;
  const std::size_t n = tokens.size();

  for (std::size_t i = 0; i < n; ++i) {
    std::u32string_view next = i + 1 < n ? std::u32string_view(tokens[i + 1].surface)
                                         : std::u32string_view();
    if (auto wh = lexicon_.lookup_wh(tokens[i].surface, next)) {
      tokens[i].is_wh = true;
      if (wh->spans_next) tokens[i + 1].is_wh = true;
    }
  }

  // A trailing name + 야/아 after a complete predicate is an address term.
  u.predicate = n - 1;
  if (n >= 2 && is_vocative_token(tokens[n - 1])) {
    const std::span<const Eojeol> before(tokens.data(), n - 1);
    bool complete = lexicon_.match_ending(tokens[n - 2].surface).has_value();
    for (const std::u32string &neg : lexicon_.neg_imperatives()) {
      complete = complete || join_surfaces(before).ends_with(neg);
    }
    if (complete) {
      tokens[n - 1].is_vocative = true;
      u.predicate = n - 2;
    }
  }
  // A-not-A tail (했어 안 했어): the first predicate closes the clause.
  if (const std::size_t p = u.predicate; p >= 2 &&
      lexicon_.is_neg_prefix(tokens[p - 1].surface) &&
      tokens[p].surface == tokens[p - 2].surface) {
    u.predicate = p - 2;
  } else if (p >= 1) {
    for (const std::u32string &prefix : lexicon_.neg_prefixes()) {
      if (tokens[p].surface == prefix + tokens[p - 1].surface) u.predicate = p - 1;
    }
  }
  if (n >= 3 && u.predicate > 0 && is_vocative_token(tokens[0])) {
    tokens[0].is_vocative = true;
  }
  for (Eojeol &t : tokens) {
    if (!t.is_vocative) continue;
    const std::u32string::size_type cut = t.surface.size() - 1;
    t.stem = t.surface.substr(0, cut);
    t.particle = t.surface.substr(cut);
  }

  for (std::size_t i = 0; i < n; ++i) {
    Eojeol &t = tokens[i];
    if (i != u.predicate && !t.is_vocative) t = strip_josa(std::move(t));
    t.is_negator = lexicon_.is_neg_prefix(t.surface) ||
                   is_prefixed_negation(t.surface);
  }
  tokens[u.predicate].ending = detect_ending(
      std::span<const Eojeol>(tokens.data(), u.predicate + 1));
  return u;
}

bool Analyzer::is_vocative_token(const Eojeol &token) const {
  const std::u32string &s = token.surface;
  if (s.size() < 2 || token.is_wh) return false;
  const char32_t last = s.back();
  if (last != U'야' && last != U'아') return false;
  const char32_t stem_final = s[s.size() - 2];
  if (!hangul::is_syllable(stem_final)) return false;
  const bool batchim = hangul::has_batchim(stem_final);
  if ((last == U'야' && batchim) || (last == U'아' && !batchim)) return false;
  // 거야, 이야 and other longer endings are predicates, not address terms.
  if (auto e = lexicon_.match_ending(s); e && e->entry.surface.size() > 1) {
    return false;
  }
  return true;
}

bool Analyzer::is_prefixed_negation(std::u32string_view token) const {
  if (lexicon_.is_neg_exception(token)) return false;
  for (const std::u32string &prefix : lexicon_.neg_prefixes()) {
    if (token.size() <= prefix.size() || !token.starts_with(prefix)) continue;
    const std::u32string_view rest = token.substr(prefix.size());
    if (lexicon_.match_connective(rest) || lexicon_.match_ending(rest)) {
      return true;
    }
  }
  return false;
}

Eojeol Analyzer::strip_josa(Eojeol token) const {
  const std::u32string &s = token.surface;
  token.stem = s;
  token.particle.reset();
  if (s.size() < 2) return token;
  const Particle *best = nullptr;
  for (const Particle &p : lexicon_.particles()) {
    if (s.size() <= p.surface.size() || !s.ends_with(p.surface)) continue;
    const char32_t stem_final = s[s.size() - p.surface.size() - 1];
    if (!lexicon_.josa_valid(stem_final, p.surface)) continue;
    if (best == nullptr || p.surface.size() > best->surface.size()) best = &p;
  }
  if (best != nullptr) {
    token.stem = s.substr(0, s.size() - best->surface.size());
    token.particle = best->surface;
  }
  return token;
}

std::optional<EndingMatch> Analyzer::detect_ending(
    std::span<const Eojeol> tokens) const {
  if (tokens.empty()) return std::nullopt;
  const std::vector<std::u32string> words = surfaces(tokens);
  return lexicon_.match_ending(std::span<const std::u32string>(words));
}

NegationProfile Analyzer::profile_negation(const NormalizedUtterance &u) const {
  NegationProfile profile;
  if (u.tokens.empty()) return profile;
  const std::span<const Eojeol> clause(u.tokens.data(), u.predicate + 1);
  const std::u32string text = join_surfaces(clause);

  for (const std::u32string &entry : lexicon_.danger_predicates()) {
    if (auto begin = match_tail_prefix(clause, entry)) {
      if (!profile.danger_begin || *begin < *profile.danger_begin) {
        profile.danger_begin = begin;
      }
    }
  }
  profile.danger_pred = profile.danger_begin.has_value();
  const std::size_t limit = profile.danger_begin.value_or(clause.size());

  for (std::size_t i = 0; i < limit; ++i) {
    const std::u32string &s = clause[i].surface;
    if ((lexicon_.is_neg_prefix(s) && i + 1 < clause.size()) ||
        is_prefixed_negation(s)) {
      profile.preverbal_an = true;
    }
    if (i + 1 < clause.size() && !lexicon_.is_disjunction(s)) {
      auto c = lexicon_.match_connective(s);
      if (c && c->kind == ConnectiveKind::kCondition) {
        profile.conditional_myen = true;
      }
    }
  }

  auto attached = [&](std::size_t pos) {
    return pos > 0 && text[pos - 1] != U' ';
  };
  for (const std::u32string &entry : lexicon_.neg_imperatives()) {
    if (text.size() > entry.size() && text.ends_with(entry) &&
        attached(text.size() - entry.size())) {
      profile.suffix_ci_ma = true;
    }
  }
  for (const std::u32string &entry : lexicon_.neg_anh()) {
    for (std::size_t pos = text.find(entry); pos != std::u32string::npos;
         pos = text.find(entry, pos + 1)) {
      if (attached(pos)) profile.suffix_ci_anh = true;
    }
  }

  for (std::size_t i = 0; i + 1 < clause.size(); ++i) {
    if (lexicon_.is_coordination(clause[i].surface)) {
      profile.malgo = i;
      break;
    }
  }
  return profile;
}

}  // namespace saek
