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

#ifndef SAEK_TEXT_H_
#define SAEK_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace saek {

// UTF-8 <-> UTF-32. Ill-formed input bytes decode to U+FFFD.
std::u32string to_u32(std::string_view utf8);
std::string to_utf8(std::u32string_view text);

// Unicode NFC.
std::u32string nfc(std::u32string_view text);
std::string nfc(std::string_view utf8);

// Splits on runs of U+0020.
std::vector<std::u32string> split_spaces(std::u32string_view text);
std::u32string join(const std::vector<std::u32string> &parts,
                    std::u32string_view sep = U" ");

// Collapses all Unicode whitespace runs to one space and trims the ends.
std::u32string collapse_whitespace(std::u32string_view text);

}  // namespace saek

#endif  // SAEK_TEXT_H_
