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

#include "sumrobust/providers.h"

#include "fmt/format.h"
#include "json.hpp"
#include "sumrobust/builtin_data.h"
#include "sumrobust/status_macros.h"
#include "sumrobust/textops.h"
#include "sumrobust/util.h"

namespace sumrobust {
namespace {

absl::StatusOr<nlohmann::json> ParseObject(std::string_view json, std::string_view what) {
  nlohmann::json j = nlohmann::json::parse(json, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    return absl::InvalidArgumentError(fmt::format("{} must be a JSON object", what));
  }
  return j;
}

std::string TrimPunctuation(std::string_view s) {
  s = StripWhitespace(s);
  while (!s.empty() && (s.front() == '-' || s.front() == '*' || s.front() == '"'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == '.' || s.back() == ',' || s.back() == '"')) s.remove_suffix(1);
  return std::string(StripWhitespace(s));
}

}  // namespace

absl::StatusOr<ThesaurusSynonymProvider> ThesaurusSynonymProvider::FromJson(std::string_view json) {
  ThesaurusSynonymProvider provider;
  RETURN_IF_ERROR(provider.MergeJson(json));
  return provider;
}

absl::StatusOr<ThesaurusSynonymProvider> ThesaurusSynonymProvider::FromFile(
    const std::string& path) {
  ASSIGN_OR_RETURN(std::string contents, ReadFile(path));
  return FromJson(contents);
}

const ThesaurusSynonymProvider& ThesaurusSynonymProvider::Builtin() {
  static const ThesaurusSynonymProvider* provider = [] {
    auto p = FromJson(builtin::kThesaurus);
    return new ThesaurusSynonymProvider(p.ok() ? *std::move(p) : ThesaurusSynonymProvider());
  }();
  return *provider;
}

absl::Status ThesaurusSynonymProvider::MergeJson(std::string_view json) {
  ASSIGN_OR_RETURN(nlohmann::json j, ParseObject(json, "thesaurus"));
  for (const auto& [term, candidates] : j.items()) {
    if (!candidates.is_array()) {
      return absl::InvalidArgumentError(fmt::format("thesaurus entry {} is not a list", term));
    }
    std::vector<std::string> list;
    for (const auto& c : candidates) {
      if (!c.is_string()) {
        return absl::InvalidArgumentError(
            fmt::format("thesaurus entry {} has a non-string candidate", term));
      }
      list.push_back(c.get<std::string>());
    }
    entries_[NormalizeTerm(term)] = std::move(list);
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<std::string>> ThesaurusSynonymProvider::Synonyms(
    std::string_view term) const {
  const auto it = entries_.find(NormalizeTerm(term));
  if (it == entries_.end() || it->second.empty()) {
    return absl::NotFoundError(fmt::format("no synonym for {}", term));
  }
  return it->second;
}

absl::StatusOr<std::vector<std::string>> RemoteSynonymProvider::Synonyms(
    std::string_view term) const {
  const std::string prompt = fmt::format(
      "List up to five single-word synonyms for the word \"{}\", one per line, with no other text.",
      term);
  ASSIGN_OR_RETURN(ChatCompletion completion, client_->Complete(prompt));
  std::vector<std::string> out;
  for (std::string_view line : Split(completion.content, '\n')) {
    std::string candidate = TrimPunctuation(line);
    if (!candidate.empty() && candidate.find(' ') == std::string::npos) {
      out.push_back(std::move(candidate));
    }
  }
  if (out.empty()) return absl::NotFoundError(fmt::format("no synonym for {}", term));
  return out;
}

absl::StatusOr<MapParaphraseProvider> MapParaphraseProvider::FromJson(std::string_view json) {
  MapParaphraseProvider provider;
  RETURN_IF_ERROR(provider.MergeJson(json));
  return provider;
}

absl::StatusOr<MapParaphraseProvider> MapParaphraseProvider::FromFile(const std::string& path) {
  ASSIGN_OR_RETURN(std::string contents, ReadFile(path));
  return FromJson(contents);
}

const MapParaphraseProvider& MapParaphraseProvider::Builtin() {
  static const MapParaphraseProvider* provider = [] {
    auto p = FromJson(builtin::kParaphrases);
    return new MapParaphraseProvider(p.ok() ? *std::move(p) : MapParaphraseProvider());
  }();
  return *provider;
}

absl::Status MapParaphraseProvider::MergeJson(std::string_view json) {
  ASSIGN_OR_RETURN(nlohmann::json j, ParseObject(json, "paraphrase map"));
  for (const auto& [sentence, paraphrase] : j.items()) {
    if (!paraphrase.is_string()) {
      return absl::InvalidArgumentError(
          fmt::format("paraphrase for \"{}\" is not a string", sentence));
    }
    entries_[sentence] = paraphrase.get<std::string>();
  }
  return absl::OkStatus();
}

absl::StatusOr<std::string> MapParaphraseProvider::Paraphrase(std::string_view sentence) const {
  std::string_view key = StripWhitespace(sentence);
  auto it = entries_.find(key);
  while (it == entries_.end() && !key.empty() &&
         (key.back() == '.' || key.back() == '!' || key.back() == '?')) {
    key.remove_suffix(1);
    it = entries_.find(key);
  }
  if (it == entries_.end()) {
    return absl::NotFoundError(fmt::format("no paraphrase for \"{}\"", sentence));
  }
  return it->second;
}

absl::StatusOr<std::string> RemoteParaphraseProvider::Paraphrase(std::string_view sentence) const {
  const std::string prompt = fmt::format(
      "Paraphrase the following sentence. Reply with the paraphrase only.\n\n{}", sentence);
  auto completion = client_->Complete(prompt);
  if (!completion.ok()) {
    return absl::Status(completion.status().code(), fmt::format("paraphrase provider failed: {}",
                                                                completion.status().message()));
  }
  std::string text(StripWhitespace(completion->content));
  if (text.empty()) return absl::DataLossError("paraphrase provider returned empty text");
  return text;
}

}  // namespace sumrobust
