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

#include <array>
#include <cstdio>
#include <string>

#include "saek/error.h"

namespace saek::hangul {

namespace {

// Compatibility jamo for each tail index 1..27.
constexpr std::array<char32_t, kTailCount> kTailCompat = {
    0,      0x3131, 0x3132, 0x3133, 0x3134, 0x3135, 0x3136,
    0x3137, 0x3139, 0x313A, 0x313B, 0x313C, 0x313D, 0x313E,
    0x313F, 0x3140, 0x3141, 0x3142, 0x3144, 0x3145, 0x3146,
    0x3147, 0x3148, 0x314A, 0x314B, 0x314C, 0x314D, 0x314E};

// Compatibility jamo for each lead index 0..18.
constexpr std::array<char32_t, kLeadCount> kLeadCompat = {
    0x3131, 0x3132, 0x3134, 0x3137, 0x3138, 0x3139, 0x3141,
    0x3142, 0x3143, 0x3145, 0x3146, 0x3147, 0x3148, 0x3149,
    0x314A, 0x314B, 0x314C, 0x314D, 0x314E};

std::string hex(char32_t ch) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(ch));
  return buf;
}

}  // namespace

JamoTriple decompose(char32_t ch) {
  if (!is_syllable(ch)) {
    throw Error(ErrorCode::kNotHangulSyllable,
                "not a precomposed Hangul syllable: " + hex(ch));
  }
  const int offset = static_cast<int>(ch - kFirstSyllable);
  return JamoTriple{offset / (kVowelCount * kTailCount),
                    (offset / kTailCount) % kVowelCount, offset % kTailCount};
}

char32_t compose(const JamoTriple &j) {
  if (j.lead < 0 || j.lead >= kLeadCount || j.vowel < 0 ||
      j.vowel >= kVowelCount || j.tail < 0 || j.tail >= kTailCount) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "jamo index out of range: (" + std::to_string(j.lead) + "," +
                    std::to_string(j.vowel) + "," + std::to_string(j.tail) +
                    ")");
  }
  return kFirstSyllable +
         static_cast<char32_t>((j.lead * kVowelCount + j.vowel) * kTailCount +
                               j.tail);
}

bool has_batchim(char32_t ch) { return decompose(ch).tail != kNoTail; }

int tail_of(char32_t ch) {
  if (!is_syllable(ch)) return kNoTail;
  return static_cast<int>(ch - kFirstSyllable) % kTailCount;
}

char32_t with_tail(char32_t ch, int tail) {
  JamoTriple j = decompose(ch);
  j.tail = tail;
  return compose(j);
}

std::optional<int> tail_from_compat(char32_t jamo) {
  for (int i = 1; i < kTailCount; ++i) {
    if (kTailCompat[i] == jamo) return i;
  }
  return std::nullopt;
}

std::optional<int> lead_from_compat(char32_t jamo) {
  for (int i = 0; i < kLeadCount; ++i) {
    if (kLeadCompat[i] == jamo) return i;
  }
  return std::nullopt;
}

std::optional<int> vowel_from_compat(char32_t jamo) {
  if (jamo < 0x314F || jamo > 0x3163) return std::nullopt;
  return static_cast<int>(jamo - 0x314F);
}

}  // namespace saek::hangul
