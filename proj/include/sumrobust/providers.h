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

#ifndef SUMROBUST_PROVIDERS_H_
#define SUMROBUST_PROVIDERS_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "sumrobust/chat_client.h"
#include "sumrobust/string_containers.h"

namespace sumrobust {

class SynonymProvider {
 public:
  virtual ~SynonymProvider() = default;
  // Candidates in preference order; NotFound when there are none.
  virtual absl::StatusOr<std::vector<std::string>> Synonyms(std::string_view term) const = 0;
  virtual std::string name() const = 0;
};

// Static thesaurus: JSON object term -> [candidates]. Keys are matched
// case-insensitively.
class ThesaurusSynonymProvider : public SynonymProvider {
 public:
  static absl::StatusOr<ThesaurusSynonymProvider> FromJson(std::string_view json);
  static absl::StatusOr<ThesaurusSynonymProvider> FromFile(const std::string& path);
  static const ThesaurusSynonymProvider& Builtin();

  absl::Status MergeJson(std::string_view json);

  absl::StatusOr<std::vector<std::string>> Synonyms(std::string_view term) const override;
  std::string name() const override { return "thesaurus"; }
  size_t size() const { return entries_.size(); }

 private:
  StringMap<std::vector<std::string>> entries_;
};

class RemoteSynonymProvider : public SynonymProvider {
 public:
  explicit RemoteSynonymProvider(std::shared_ptr<const ChatClient> client)
      : client_(std::move(client)) {}

  absl::StatusOr<std::vector<std::string>> Synonyms(std::string_view term) const override;
  std::string name() const override { return "remote"; }

 private:
  std::shared_ptr<const ChatClient> client_;
};

class ParaphraseProvider {
 public:
  virtual ~ParaphraseProvider() = default;
  virtual absl::StatusOr<std::string> Paraphrase(std::string_view sentence) const = 0;
  virtual std::string name() const = 0;
};

// Exact-match lookup from a JSON object sentence -> paraphrase.
class MapParaphraseProvider : public ParaphraseProvider {
 public:
  static absl::StatusOr<MapParaphraseProvider> FromJson(std::string_view json);
  static absl::StatusOr<MapParaphraseProvider> FromFile(const std::string& path);
  static const MapParaphraseProvider& Builtin();

  absl::Status MergeJson(std::string_view json);

  absl::StatusOr<std::string> Paraphrase(std::string_view sentence) const override;
  std::string name() const override { return "map"; }

 private:
  StringMap<std::string> entries_;
};

class RemoteParaphraseProvider : public ParaphraseProvider {
 public:
  explicit RemoteParaphraseProvider(std::shared_ptr<const ChatClient> client)
      : client_(std::move(client)) {}

  absl::StatusOr<std::string> Paraphrase(std::string_view sentence) const override;
  std::string name() const override { return "remote"; }

 private:
  std::shared_ptr<const ChatClient> client_;
};

}  // namespace sumrobust

#endif  // SUMROBUST_PROVIDERS_H_
