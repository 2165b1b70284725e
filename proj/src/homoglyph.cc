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

#include "sumrobust/homoglyph.h"

#include <set>

#include "fmt/format.h"
#include "fmt/printf.h"
#include "json.hpp"
#include "sumrobust/status_macros.h"
#include "sumrobust/utf8.h"
#include "sumrobust/util.h"

namespace sumrobust {
namespace {

constexpr std::pair<char32_t, char32_t> kCyrillic[] = {
    {U'a', 0x0430}, {U'e', 0x0435}, {U'o', 0x043E}, {U'i', 0x0456},
    {U'c', 0x0441}, {U'p', 0x0440}, {U's', 0x0455}, {U'x', 0x0445},
};

// Applied after the Cyrillic set, so e and i resolve to the Greek forms.
constexpr std::pair<char32_t, char32_t> kGreek[] = {
    {U'e', 0x03B5},
    {U'i', 0x03B9},
};

}  // namespace

HomoglyphTable HomoglyphTable::Default(bool allow_case_homoglyphs) {
  HomoglyphTable table;
  for (auto [from, to] : kCyrillic) table.char_map_[from] = to;
  for (auto [from, to] : kGreek) table.char_map_[from] = to;
  if (allow_case_homoglyphs) {
    for (char32_t c = U'A'; c <= U'Z'; ++c) table.char_map_[c] = c + 0x20;
  }
  return table;
}

absl::Status HomoglyphTable::Set(char32_t from, char32_t to) {
  if (from == to) {
    return absl::InvalidArgumentError(fmt::sprintf("identity homoglyph U+%04X", uint32_t{from}));
  }
  char_map_[from] = to;
  return absl::OkStatus();
}

absl::Status HomoglyphTable::MergeJson(std::string_view json) {
  const nlohmann::json j = nlohmann::json::parse(json, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    return absl::InvalidArgumentError("homoglyph table must be a JSON object");
  }
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) {
      return absl::InvalidArgumentError(fmt::format("homoglyph for '{}' is not a string", key));
    }
    const std::string target = value.get<std::string>();
    if (!IsSingleCodepoint(key) || !IsSingleCodepoint(target)) {
      return absl::InvalidArgumentError(
          fmt::format("homoglyph entry '{}' -> '{}' is not single code points", key, target));
    }
    RETURN_IF_ERROR(Set(DecodeUtf8(key)[0], DecodeUtf8(target)[0]));
  }
  return absl::OkStatus();
}

absl::Status HomoglyphTable::MergeFile(const std::string& path) {
  ASSIGN_OR_RETURN(std::string contents, ReadFile(path));
  return MergeJson(contents);
}

std::optional<char32_t> HomoglyphTable::Lookup(char32_t ch) const {
  const auto it = char_map_.find(ch);
  if (it == char_map_.end()) return std::nullopt;
  return it->second;
}

char32_t HomoglyphTable::Map(char32_t ch) const { return Lookup(ch).value_or(ch); }

std::string HomoglyphTable::MapWord(std::string_view word) const {
  std::u32string chars = DecodeUtf8(word);
  std::set<char32_t> used;
  for (char32_t& c : chars) {
    const auto target = Lookup(c);
    if (target.has_value() && used.insert(c).second) c = *target;
  }
  return EncodeUtf8(chars);
}

bool HomoglyphTable::HasMappable(std::string_view word) const {
  for (char32_t c : DecodeUtf8(word)) {
    if (char_map_.contains(c)) return true;
  }
  return false;
}

const HomoglyphTable& DefaultHomoglyphTable() {
  static const HomoglyphTable* table = new HomoglyphTable(HomoglyphTable::Default());
  return *table;
}

}  // namespace sumrobust
