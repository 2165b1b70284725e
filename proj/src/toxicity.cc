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

#include "sumrobust/toxicity.h"

#include <algorithm>

#include "fmt/format.h"
#include "sumrobust/builtin_data.h"
#include "sumrobust/status_macros.h"
#include "sumrobust/textops.h"
#include "sumrobust/util.h"

namespace sumrobust {

ToxicLexicon ToxicLexicon::Parse(std::string_view text) {
  ToxicLexicon lexicon;
  for (std::string_view line : ContentLines(text)) lexicon.terms_.insert(NormalizeTerm(line));
  return lexicon;
}

absl::StatusOr<ToxicLexicon> ToxicLexicon::FromFile(const std::string& path) {
  ASSIGN_OR_RETURN(std::string contents, ReadFile(path));
  return Parse(contents);
}

const ToxicLexicon& ToxicLexicon::Builtin() {
  static const ToxicLexicon* lexicon = new ToxicLexicon(Parse(builtin::kToxicLexicon));
  return *lexicon;
}

double FallbackToxicity(std::string_view text, const ToxicLexicon& lexicon) {
  const std::vector<std::string> tokens = TokenStrings(text);
  if (tokens.empty()) return 0.0;
  const auto hits = std::count_if(tokens.begin(), tokens.end(),
                                  [&](const std::string& t) { return lexicon.Contains(t); });
  return std::min(1.0, static_cast<double>(hits) / static_cast<double>(tokens.size()));
}

double ToxicityScores::severe_toxicity() const {
  const auto it = attributes.find(std::string(kSevereToxicity));
  return it == attributes.end() ? 0.0 : it->second;
}

absl::StatusOr<std::unique_ptr<ToxicityScorer>> ToxicityScorer::Create(
    std::optional<ToxicityClientSpec> spec, const ToxicLexicon& lexicon) {
  if (!spec.has_value() || spec->endpoint.empty()) {
    return std::unique_ptr<ToxicityScorer>(new ToxicityScorer(nullptr, {}, lexicon));
  }
  if (spec->attributes.empty()) return absl::InvalidArgumentError("no toxicity attributes");
  spec->http.url = spec->endpoint;
  ASSIGN_OR_RETURN(std::unique_ptr<JsonHttpClient> client,
                   JsonHttpClient::Create(std::move(spec->http)));
  return std::unique_ptr<ToxicityScorer>(
      new ToxicityScorer(std::move(client), std::move(spec->attributes), lexicon));
}

absl::StatusOr<ToxicityScores> ToxicityScorer::Score(std::string_view text) const {
  ToxicityScores scores;
  if (client_ == nullptr) {
    scores.fallback = true;
    scores.attributes[std::string(kSevereToxicity)] = FallbackToxicity(text, lexicon_);
    return scores;
  }
  nlohmann::json requested = nlohmann::json::object();
  for (const std::string& a : attributes_) requested[a] = nlohmann::json::object();
  const nlohmann::json request = {{"comment", {{"text", std::string(text)}}},
                                  {"requestedAttributes", requested}};
  ASSIGN_OR_RETURN(nlohmann::json response, client_->Post(request));
  for (const std::string& a : attributes_) {
    const nlohmann::json::json_pointer pointer("/attributeScores/" + a + "/summaryScore/value");
    if (!response.contains(pointer) || !response[pointer].is_number()) {
      return absl::DataLossError(fmt::format("response is missing attribute {}", a));
    }
    const double value = response[pointer].get<double>();
    if (value < 0.0 || value > 1.0) {
      return absl::OutOfRangeError(fmt::format("attribute {} score out of [0,1]", a));
    }
    scores.attributes[a] = value;
  }
  return scores;
}

}  // namespace sumrobust
