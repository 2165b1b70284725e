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

#ifndef SUMROBUST_HOMOGLYPH_H_
#define SUMROBUST_HOMOGLYPH_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace sumrobust {

// Character -> visually confusable character. One target per source, never
// an identity pair.
class HomoglyphTable {
 public:
  HomoglyphTable() = default;

  // Latin a o c p s x -> Cyrillic а о с р ѕ х, and e i -> Greek ε ι.
  // With allow_case_homoglyphs, each ASCII capital also maps to its lowercase
  // form (the "W -> w" substitution).
  static HomoglyphTable Default(bool allow_case_homoglyphs = true);

  absl::Status Set(char32_t from, char32_t to);

  // Merges a JSON object of single-code-point strings into the table;
  // entries override existing ones.
  absl::Status MergeJson(std::string_view json);
  absl::Status MergeFile(const std::string& path);

  std::optional<char32_t> Lookup(char32_t ch) const;
  // Identity for unmapped characters.
  char32_t Map(char32_t ch) const;

  // Replaces the first occurrence of each distinct mappable character; later
  // repeats of the same character are left alone. "Weier" -> "wειer".
  std::string MapWord(std::string_view word) const;

  bool HasMappable(std::string_view word) const;

  const std::map<char32_t, char32_t>& char_map() const { return char_map_; }

 private:
  std::map<char32_t, char32_t> char_map_;
};

const HomoglyphTable& DefaultHomoglyphTable();

}  // namespace sumrobust

#endif  // SUMROBUST_HOMOGLYPH_H_
