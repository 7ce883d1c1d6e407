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

#include "saek/hangul.h"

#include <gtest/gtest.h>
#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include "saek/error.h"

namespace saek::hangul {
namespace {

// Canonical decomposition through ICU, mapped back to indices.
JamoTriple icu_nfd(char32_t ch) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *nfd = icu::Normalizer2::getNFDInstance(status);
  EXPECT_TRUE(U_SUCCESS(status));
  const icu::UnicodeString out =
      nfd->normalize(icu::UnicodeString(static_cast<UChar32>(ch)), status);
  EXPECT_TRUE(U_SUCCESS(status));
  JamoTriple j;
  j.lead = out.char32At(0) - 0x1100;
  j.vowel = out.char32At(1) - 0x1161;
  j.tail = out.length() > 2 ? out.char32At(2) - 0x11A7 : 0;
  return j;
}

TEST(HangulTest, DecomposeMatchesIcuForEverySyllable) {
  for (char32_t ch = kFirstSyllable; ch <= kLastSyllable; ++ch) {
    ASSERT_EQ(decompose(ch), icu_nfd(ch)) << static_cast<int>(ch);
  }
}

TEST(HangulTest, ComposeInvertsDecompose) {
  int count = 0;
  for (char32_t ch = kFirstSyllable; ch <= kLastSyllable; ++ch, ++count) {
    ASSERT_EQ(compose(decompose(ch)), ch);
  }
  EXPECT_EQ(count, 11172);
  EXPECT_EQ(kSyllableCount, 11172);
}

TEST(HangulTest, KnownSyllables) {
  // 한 = ㅎ(18) ㅏ(0) ㄴ(4)
  EXPECT_EQ(decompose(U'한'), (JamoTriple{18, 0, 4}));
  EXPECT_EQ(compose({0, 0, 0}), U'가');
  EXPECT_EQ(compose({18, 20, 27}), U'힣');
  EXPECT_EQ(tail_of(U'왔'), kTailSsangSiot);
  EXPECT_EQ(tail_of(U'있'), kTailSsangSiot);
  EXPECT_EQ(tail_of(U'올'), kTailRieul);
  EXPECT_EQ(tail_of(U'a'), kNoTail);
}

TEST(HangulTest, Batchim) {
  EXPECT_TRUE(has_batchim(U'택'));
  EXPECT_FALSE(has_batchim(U'스'));
  EXPECT_THROW(has_batchim(U'x'), Error);
}

TEST(HangulTest, WithTail) {
  EXPECT_EQ(with_tail(U'오', kTailNieun), U'온');
  EXPECT_EQ(with_tail(U'살', kNoTail), U'사');
  EXPECT_EQ(with_tail(U'하', kTailRieul), U'할');
}

TEST(HangulTest, RejectsNonSyllables) {
  for (char32_t ch : {U'A', U'ㄱ', U'ᄀ', U'꯿', U'힤'}) {
    try {
      decompose(ch);
      FAIL() << "no throw for " << static_cast<int>(ch);
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), ErrorCode::kNotHangulSyllable);
    }
  }
}

TEST(HangulTest, ComposeRangeChecks) {
  for (JamoTriple bad : {JamoTriple{19, 0, 0}, JamoTriple{0, 21, 0},
                         JamoTriple{0, 0, 28}, JamoTriple{-1, 0, 0}}) {
    try {
      compose(bad);
      FAIL();
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), ErrorCode::kIndexOutOfRange);
    }
  }
}

TEST(HangulTest, CompatibilityJamo) {
  EXPECT_EQ(tail_from_compat(U'ㅆ'), kTailSsangSiot);
  EXPECT_EQ(tail_from_compat(U'ㄹ'), kTailRieul);
  EXPECT_EQ(tail_from_compat(U'ㅂ'), kTailBieup);
  EXPECT_FALSE(tail_from_compat(U'ㄸ').has_value());
  EXPECT_EQ(lead_from_compat(U'ㅎ'), 18);
  EXPECT_EQ(vowel_from_compat(U'ㅣ'), 20);
  EXPECT_FALSE(vowel_from_compat(U'ㄱ').has_value());
}

}  // namespace
}  // namespace saek::hangul
