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

#ifndef SAEK_TESTS_FUZZ_H_
#define SAEK_TESTS_FUZZ_H_

#include <random>
#include <string>
#include <vector>

#include "saek/engine.h"
#include "saek/hangul.h"
#include "saek/text.h"

namespace saek::testing {

// Utterances assembled from nouns, particles, wh forms, negators and
// sentence-final predicates, with random syllables mixed in.
class UtteranceFuzzer {
 public:
  explicit UtteranceFuzzer(unsigned seed) : rng_(seed) {}

  std::string next() {
    std::vector<std::string> words;
    const int shape = pick(6);
    if (shape == 5) {
      words.push_back(any_noun());
      words.push_back(pick_of(kWh));
      words.push_back(any_noun() + particle());
      words.push_back(question_ending());
      return joined(words);
    }
    const int nouns = 1 + pick(3);
    for (int i = 0; i < nouns; ++i) {
      words.push_back(pick(3) == 0 ? any_noun() : any_noun() + particle());
    }
    switch (shape) {
      case 0:  // wh question
        words.insert(words.begin() + pick(static_cast<int>(words.size()) + 1),
                     pick_of(kWh));
        words.push_back(question_ending());
        break;
      case 1:  // yes/no
        words.push_back(question_ending());
        break;
      case 2:  // alternative
        words.push_back(question_ending());
        words.push_back(any_noun() + particle());
        words.push_back(words[words.size() - 2]);
        break;
      case 3:  // prohibition or 말고 command
        if (pick(2) == 0) {
          words.push_back(pick_of(kVerbs) + "지 마");
        } else {
          words.push_back(pick_of(kVerbs) + "지 말고");
          words.push_back(any_noun() + particle());
          words.push_back(pick_of(kCommandEndings));
        }
        break;
      default:  // command
        if (pick(3) == 0) words.push_back("안");
        words.push_back(pick_of(kCommandEndings));
        break;
    }
    return joined(words);
  }

  // Arbitrary bytes, frequently invalid UTF-8.
  std::string bytes() {
    std::string s(static_cast<std::size_t>(pick(24)), '\0');
    for (char &c : s) c = static_cast<char>(pick(256));
    return s;
  }

  // Valid UTF-8 drawn from several scripts, whitespace and jamo.
  std::string unicode() {
    std::u32string s;
    const int n = 1 + pick(16);
    for (int i = 0; i < n; ++i) {
      switch (pick(5)) {
        case 0: s += U' '; break;
        case 1: s += static_cast<char32_t>(0x3131 + pick(51)); break;
        case 2: s += static_cast<char32_t>(0x20 + pick(0x5f)); break;
        case 3: s += static_cast<char32_t>(0x1100 + pick(0x100)); break;
        default: s += static_cast<char32_t>(hangul::kFirstSyllable + pick(hangul::kSyllableCount)); break;
      }
    }
    return to_utf8(s);
  }

 private:
  static constexpr const char *kNouns[] = {
      "밥", "회의", "버스", "택시", "창문", "숙제", "일정", "학교", "친구",
      "서울", "커피", "송금", "신청", "확인", "청소", "방", "문", "비행기",
      "오늘", "내일", "어제", "지금", "모두", "이번 주"};
  static constexpr const char *kParticles[] = {
      "이", "가", "은", "는", "을", "를", "에", "에서", "로", "으로", "도", "만", "랑"};
  static constexpr const char *kWh[] = {
      "누구", "누가", "뭐", "무엇", "어디", "어디서", "언제", "왜", "어떻게",
      "몇 시에", "무슨", "얼마"};
  static constexpr const char *kQuestionEndings[] = {
      "왔니", "했어", "먹었어", "갈까", "있니", "할거야",
      "하는 거야", "먹을래", "봤어요", "되나요", "했습니까", "가요", "좋아", "먹습니까", "와요"};
  static constexpr const char *kCopulas[] = {"인가요", "이야", "이니", "야", "예요"};
  static constexpr const char *kVerbs[] = {"가", "먹", "뛰", "열", "보", "만지", "하"};
  static constexpr const char *kCommandEndings[] = {
      "해", "하세요", "해라", "가", "먹어", "열어줘", "꺼줘", "바랍니다",
      "하십시오", "와", "봐", "해야 돼", "확인해 주세요", "끝내라", "가요", "와요", "하세요"};

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  template <std::size_t N>
  std::string pick_of(const char *const (&table)[N]) {
    return table[pick(static_cast<int>(N))];
  }

  std::string any_noun() {
    if (pick(4) != 0) return pick_of(kNouns);
    std::u32string s;
    const int n = 1 + pick(3);
    for (int i = 0; i < n; ++i) {
      s += static_cast<char32_t>(hangul::kFirstSyllable + pick(hangul::kSyllableCount));
    }
    return to_utf8(s);
  }

  std::string particle() { return pick(2) == 0 ? "" : pick_of(kParticles); }

  // A question predicate; copulas attach to a noun (학교인가요).
  std::string question_ending() {
    if (pick(5) != 0) return pick_of(kQuestionEndings);
    return pick_of(kNouns) + pick_of(kCopulas);
  }

  static std::string joined(const std::vector<std::string> &words) {
    std::string out;
    for (const std::string &w : words) {
      if (!out.empty()) out += ' ';
      out += w;
    }
    return out;
  }

  std::mt19937 rng_;
};

// Empty when the argument honours the suffix contract of its category,
// otherwise a description of the violation.
inline std::string suffix_violation(const Lexicon &lexicon, const Argument &a) {
  const std::u32string text = to_u32(a.text);
  const auto ends = [&](std::u32string_view tail) {
    return text.size() >= tail.size() &&
           text.compare(text.size() - tail.size(), tail.size(), tail) == 0;
  };
  switch (a.category) {
    case ArgumentCategory::kWhether:
      if (ends(U"여부") || ends(U"지")) return {};
      break;
    case ArgumentCategory::kChoice:
      if (text.find(U" 중 ") != std::u32string::npos && ends(U" 것")) return {};
      break;
    case ArgumentCategory::kProhibition:
      if (ends(U"지 않기")) return {};
      break;
    case ArgumentCategory::kRequirement:
      if (ends(U"기")) return {};
      break;
    default: {
      if (a.quantified_object) return {};
      const std::vector<std::u32string> words = split_spaces(text);
      if (!words.empty() && lexicon.is_wh_noun(words.back())) return {};
      break;
    }
  }
  return "suffix of '" + a.text + "' does not fit " +
         std::string(category_tag(a.category));
}

// Empty when no output word is a bare sentence-final ending.
inline std::string ending_violation(const Lexicon &lexicon, const Argument &a) {
  for (const std::u32string &w : split_spaces(to_u32(a.text))) {
    if (lexicon.is_ending_surface(w)) {
      return "ending surface '" + to_utf8(w) + "' in '" + a.text + "'";
    }
  }
  return {};
}

}  // namespace saek::testing

#endif  // SAEK_TESTS_FUZZ_H_
