// Copyright 2026 The sumrobust Authors.
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

#ifndef SUMROBUST_UTF8_H_
#define SUMROBUST_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace sumrobust {

inline constexpr char32_t kReplacementChar = 0xFFFD;

// Decodes one code point starting at text[pos]; advances pos. Malformed input
// yields U+FFFD and consumes one byte.
char32_t DecodeUtf8At(std::string_view text, size_t& pos);

std::u32string DecodeUtf8(std::string_view text);
void AppendUtf8(char32_t cp, std::string& out);
std::string EncodeUtf8(std::u32string_view text);

// Number of code points.
size_t Utf8Length(std::string_view text);

// True iff text holds exactly one well-formed code point.
bool IsSingleCodepoint(std::string_view text);

// Letter-case helpers covering ASCII, Latin-1, Greek and basic Cyrillic.
bool IsUpperCodepoint(char32_t cp);
char32_t ToLowerCodepoint(char32_t cp);
char32_t ToUpperCodepoint(char32_t cp);

}  // namespace sumrobust

#endif  // SUMROBUST_UTF8_H_
