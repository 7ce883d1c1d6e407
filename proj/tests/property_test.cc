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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fuzz.h"
#include "saek/engine.h"
#include "saek/text.h"

namespace saek {
namespace {

using testing::UtteranceFuzzer;

constexpr int kCases = 2000;

TEST(PropertyTest, ArgumentsKeepTheirSuffixContract) {
  const Lexicon &lexicon = Lexicon::builtin();
  const Engine engine(lexicon);
  UtteranceFuzzer fuzz(20240611);
  int extracted = 0;
  for (int i = 0; i < kCases; ++i) {
    const std::string line = fuzz.next();
    const Result r = engine.extract(line);
    if (!r.argument) continue;
    ++extracted;
    EXPECT_EQ(testing::suffix_violation(lexicon, *r.argument), "") << line;
    EXPECT_EQ(testing::ending_violation(lexicon, *r.argument), "") << line;
    EXPECT_EQ(r.argument->source_label, r.classification->label) << line;
    EXPECT_EQ(is_command_category(r.argument->category),
              !is_question(r.classification->label))
        << line;
  }
  // The generator is built to be mostly in-grammar.
  EXPECT_GT(extracted, kCases / 2);
}

TEST(PropertyTest, MalgoDropsTheFirstClause) {
  const Engine engine(Lexicon::builtin());
  UtteranceFuzzer fuzz(99);
  int checked = 0;
  for (int i = 0; i < kCases; ++i) {
    const std::string line = fuzz.next();
    const Result r = engine.extract(line);
    if (!r.argument || !r.classification ||
        r.classification->label != IntentLabel::kStrongRequirement) {
      continue;
    }
    const std::vector<std::u32string> words = split_spaces(to_u32(line));
    const auto malgo = std::find_if(words.begin(), words.end(), [](const auto &w) {
      return w.ends_with(U"말고");
    });
    if (malgo == words.end()) continue;
    ++checked;
    const std::set<std::u32string> after(malgo + 1, words.end());
    for (const std::u32string &w : split_spaces(to_u32(r.argument->text))) {
      for (auto it = words.begin(); it != malgo + 1; ++it) {
        if (after.contains(*it)) continue;
        EXPECT_NE(w, *it) << line << " -> " << r.argument->text;
      }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(PropertyTest, ArbitraryInputOnlyFailsWithTypedErrors) {
  const Engine engine(Lexicon::builtin());
  UtteranceFuzzer fuzz(7);
  for (int i = 0; i < kCases; ++i) {
    for (const std::string &line : {fuzz.bytes(), fuzz.unicode()}) {
      Result r;
      ASSERT_NO_THROW(r = engine.extract(line));
      EXPECT_NE(r.classification.has_value(), r.error.has_value());
      // Records always serialize.
      EXPECT_NO_THROW(to_json(r).dump(-1, ' ', false,
                                      nlohmann::json::error_handler_t::replace));
    }
  }
}

TEST(PropertyTest, DeterministicAcrossLexiconInstances) {
  const Lexicon loaded = Lexicon::load_file(SAEK_LEXICON_TSV);
  const Engine a(Lexicon::builtin());
  const Engine b(loaded);
  UtteranceFuzzer fuzz(3);
  for (int i = 0; i < 500; ++i) {
    const std::string line = fuzz.next();
    const std::string first = to_json(a.extract(line)).dump();
    EXPECT_EQ(first, to_json(a.extract(line)).dump()) << line;
    EXPECT_EQ(first, to_json(b.extract(line)).dump()) << line;
  }
}

}  // namespace
}  // namespace saek
