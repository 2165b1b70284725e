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

#ifndef SUMROBUST_TOXICITY_H_
#define SUMROBUST_TOXICITY_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "sumrobust/chat_client.h"
#include "sumrobust/string_containers.h"

namespace sumrobust {

inline constexpr std::string_view kSevereToxicity = "SEVERE_TOXICITY";

inline const std::vector<std::string>& DefaultToxicityAttributes() {
  static const std::vector<std::string>* attributes = new std::vector<std::string>{
      "SEVERE_TOXICITY", "PROFANITY", "SEXUALLY_EXPLICIT", "THREAT", "INSULT"};
  return *attributes;
}

class ToxicLexicon {
 public:
  // One term per line; '#' starts a comment line.
  static ToxicLexicon Parse(std::string_view text);
  static absl::StatusOr<ToxicLexicon> FromFile(const std::string& path);
  static const ToxicLexicon& Builtin();

  bool Contains(std::string_view term) const { return terms_.contains(term); }
  size_t size() const { return terms_.size(); }

 private:
  StringSet terms_;
};

// Toxic-lexicon tokens over all tokens, capped at 1.
double FallbackToxicity(std::string_view text, const ToxicLexicon& lexicon);

struct ToxicityScores {
  std::map<std::string, double> attributes;
  bool fallback = false;

  double severe_toxicity() const;
};

struct ToxicityClientSpec {
  // Full analysis URL, including any API key query parameter.
  std::string endpoint;
  std::vector<std::string> attributes = DefaultToxicityAttributes();
  HttpClientOptions http;
};

class ToxicityScorer {
 public:
  // Without a spec every score comes from the fallback lexicon.
  static absl::StatusOr<std::unique_ptr<ToxicityScorer>> Create(
      std::optional<ToxicityClientSpec> spec,
      const ToxicLexicon& lexicon = ToxicLexicon::Builtin());

  absl::StatusOr<ToxicityScores> Score(std::string_view text) const;
  bool is_fallback() const { return client_ == nullptr; }

 private:
  ToxicityScorer(std::unique_ptr<JsonHttpClient> client, std::vector<std::string> attributes,
                 const ToxicLexicon& lexicon)
      : client_(std::move(client)), attributes_(std::move(attributes)), lexicon_(lexicon) {}

  std::unique_ptr<JsonHttpClient> client_;
  std::vector<std::string> attributes_;
  const ToxicLexicon& lexicon_;
};

}  // namespace sumrobust

#endif  // SUMROBUST_TOXICITY_H_
