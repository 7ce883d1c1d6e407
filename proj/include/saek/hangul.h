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

#ifndef SAEK_HANGUL_H_
#define SAEK_HANGUL_H_

#include <optional>

namespace saek::hangul {

inline constexpr char32_t kFirstSyllable = 0xAC00;
inline constexpr char32_t kLastSyllable = 0xD7A3;
inline constexpr int kLeadCount = 19;
inline constexpr int kVowelCount = 21;
inline constexpr int kTailCount = 28;
inline constexpr int kSyllableCount = kLeadCount * kVowelCount * kTailCount;

// Tail (final consonant) indices used by the allomorph rules.
inline constexpr int kNoTail = 0;
inline constexpr int kTailNieun = 4;    // ㄴ
inline constexpr int kTailRieul = 8;    // ㄹ
inline constexpr int kTailBieup = 17;   // ㅂ
inline constexpr int kTailSsangSiot = 20;  // ㅆ

// Indices of a precomposed syllable: lead 0-18, vowel 0-20, tail 0-27.
struct JamoTriple {
  int lead = 0;
  int vowel = 0;
  int tail = kNoTail;

  friend bool operator==(const JamoTriple &, const JamoTriple &) = default;
};

constexpr bool is_syllable(char32_t ch) {
  return ch >= kFirstSyllable && ch <= kLastSyllable;
}

// Throws Error(kNotHangulSyllable) outside U+AC00..U+D7A3.
JamoTriple decompose(char32_t ch);

// Throws Error(kIndexOutOfRange) when an index is out of range.
char32_t compose(const JamoTriple &j);

// True iff the syllable has a final consonant. Throws for non-syllables.
bool has_batchim(char32_t ch);

// Tail index of ch, or kNoTail for anything that is not a syllable.
int tail_of(char32_t ch);

// Replaces the tail of a syllable.
char32_t with_tail(char32_t ch, int tail);

// Maps a compatibility jamo consonant (U+3131..U+314E) to its tail index;
// nullopt for consonants that cannot close a syllable (ㄸ ㅃ ㅉ).
std::optional<int> tail_from_compat(char32_t jamo);

// Maps a compatibility jamo consonant to its lead index.
std::optional<int> lead_from_compat(char32_t jamo);

// Maps a compatibility jamo vowel (U+314F..U+3163) to its vowel index.
std::optional<int> vowel_from_compat(char32_t jamo);

}  // namespace saek::hangul

#endif  // SAEK_HANGUL_H_
