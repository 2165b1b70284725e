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

#include "sumrobust/poison.h"

#include <algorithm>
#include <cmath>

#include "fmt/format.h"
#include "json.hpp"
#include "sumrobust/builtin_data.h"
#include "sumrobust/rng.h"
#include "sumrobust/sentiment.h"
#include "sumrobust/status_macros.h"
#include "sumrobust/string_containers.h"
#include "sumrobust/textops.h"
#include "sumrobust/utf8.h"
#include "sumrobust/util.h"

namespace sumrobust {
namespace {

constexpr std::string_view kAuxiliaries[] = {"is",  "are",  "was", "were", "has", "have",
                                             "had", "will", "can", "does", "do",  "did"};

// Stem of a contracted negation ("isn" of "isn't") -> positive auxiliary.
constexpr std::pair<std::string_view, std::string_view> kContractions[] = {
    {"isn", "is"},   {"aren", "are"},   {"wasn", "was"}, {"weren", "were"},
    {"hasn", "has"}, {"haven", "have"}, {"hadn", "had"}, {"won", "will"},
    {"can", "can"},  {"doesn", "does"}, {"don", "do"},   {"didn", "did"}};

bool IsAuxiliary(std::string_view t) {
  return std::find(std::begin(kAuxiliaries), std::end(kAuxiliaries), t) != std::end(kAuxiliaries);
}

std::optional<std::string_view> ContractionBase(std::string_view t) {
  for (const auto& [stem, base] : kContractions) {
    if (stem == t) return base;
  }
  return std::nullopt;
}

struct Edit {
  size_t begin = 0;
  size_t end = 0;
  std::string replacement;
};

}  // namespace

std::string_view TransformKindName(TransformKind kind) {
  return kind == TransformKind::kContrastive ? "contrastive" : "toxic";
}

absl::StatusOr<TransformKind> ParseTransformKind(std::string_view name) {
  if (name == "contrastive") return TransformKind::kContrastive;
  if (name == "toxic") return TransformKind::kToxic;
  return absl::InvalidArgumentError(fmt::format("unknown transform kind: {}", name));
}

absl::StatusOr<AntonymTable> AntonymTable::FromJson(std::string_view json) {
  AntonymTable table;
  RETURN_IF_ERROR(table.MergeJson(json));
  return table;
}

absl::StatusOr<AntonymTable> AntonymTable::FromFile(const std::string& path) {
  ASSIGN_OR_RETURN(std::string contents, ReadFile(path));
  return FromJson(contents);
}

const AntonymTable& AntonymTable::Builtin() {
  static const AntonymTable* table = [] {
    auto parsed = FromJson(builtin::kAntonyms);
    return new AntonymTable(parsed.ok() ? *std::move(parsed) : AntonymTable());
  }();
  return *table;
}

absl::Status AntonymTable::AddPair(std::string_view a, std::string_view b) {
  const std::string na = NormalizeTerm(a);
  const std::string nb = NormalizeTerm(b);
  if (na.empty() || nb.empty() || na == nb) {
    return absl::InvalidArgumentError(fmt::format("invalid antonym pair {} / {}", a, b));
  }
  for (const std::string& t : {na, nb}) {
    if (map_.contains(t)) {
      return absl::InvalidArgumentError(fmt::format("term {} already has an antonym", t));
    }
  }
  map_[na] = nb;
  map_[nb] = na;
  return absl::OkStatus();
}

absl::Status AntonymTable::MergeJson(std::string_view json) {
  const nlohmann::json j = nlohmann::json::parse(json, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_array()) {
    return absl::InvalidArgumentError("antonym table must be a JSON list of pairs");
  }
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
      return absl::InvalidArgumentError("antonym entries must be two-string lists");
    }
    RETURN_IF_ERROR(AddPair(pair[0].get<std::string>(), pair[1].get<std::string>()));
  }
  return absl::OkStatus();
}

std::optional<std::string> AntonymTable::Lookup(std::string_view term) const {
  const auto it = map_.find(term);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

ContrastiveResult ContrastiveTransform(std::string_view summary, const AntonymTable& table) {
  ContrastiveResult result;
  std::vector<Edit> edits;
  for (const auto& [sb, se] : SentenceSegmenter::Default().SplitSpans(summary)) {
    const std::string_view sentence = summary.substr(sb, se - sb);
    const std::vector<Token> tokens = Tokenize(sentence);
    auto original = [&](const Token& t) { return sentence.substr(t.begin, t.end - t.begin); };

    size_t flips = 0;
    for (const Token& t : tokens) {
      if (std::optional<std::string> antonym = table.Lookup(t.text)) {
        edits.push_back({sb + t.begin, sb + t.end, MatchCapitalization(original(t), *antonym)});
        ++flips;
      }
    }
    result.antonym_edits += static_cast<int>(flips);
    if (flips > 0) continue;

    for (size_t i = 0; i < tokens.size(); ++i) {
      const Token& t = tokens[i];
      const bool contracted =
          i + 1 < tokens.size() && tokens[i + 1].text == "t" && IsNegator(tokens, i + 1, sentence);
      if (contracted) {
        if (std::optional<std::string_view> base = ContractionBase(t.text)) {
          edits.push_back(
              {sb + t.begin, sb + tokens[i + 1].end, MatchCapitalization(original(t), *base)});
          ++result.negation_edits;
          ++i;
        }
        continue;
      }
      if (t.text == "cannot") {
        edits.push_back({sb + t.begin, sb + t.end, MatchCapitalization(original(t), "can")});
        ++result.negation_edits;
        continue;
      }
      if (!IsAuxiliary(t.text)) continue;
      if (i + 1 < tokens.size() && tokens[i + 1].text == "not") {
        edits.push_back({sb + t.end, sb + tokens[i + 1].end, ""});
        ++i;
      } else {
        edits.push_back({sb + t.end, sb + t.end, " not"});
      }
      ++result.negation_edits;
    }
  }

  std::string text(summary);
  std::sort(edits.begin(), edits.end(),
            [](const Edit& a, const Edit& b) { return a.begin > b.begin; });
  for (const Edit& e : edits) text.replace(e.begin, e.end - e.begin, e.replacement);
  result.text = std::move(text);
  return result;
}

ToxicTemplates ToxicTemplates::Parse(std::string_view text) {
  ToxicTemplates templates;
  for (std::string_view line : ContentLines(text)) {
    templates.templates_.emplace_back(StripWhitespace(line));
  }
  return templates;
}

absl::StatusOr<ToxicTemplates> ToxicTemplates::FromFile(const std::string& path) {
  ASSIGN_OR_RETURN(std::string contents, ReadFile(path));
  return Parse(contents);
}

const ToxicTemplates& ToxicTemplates::Builtin() {
  static const ToxicTemplates* templates = new ToxicTemplates(Parse(builtin::kToxicTemplates));
  return *templates;
}

absl::StatusOr<std::string> ToxicTransform(std::string_view summary,
                                           const ToxicTemplates& templates, uint64_t seed) {
  if (templates.size() == 0) return absl::FailedPreconditionError("empty template file");
  if (StripWhitespace(summary).empty()) {
    return absl::InvalidArgumentError("summary is empty");
  }
  CounterRng rng(seed);
  return fmt::format("{} {}", summary, templates.templates()[rng.Uniform(templates.size())]);
}

absl::StatusOr<std::string> RuleContrastiveTransformer::Transform(std::string_view summary,
                                                                  uint64_t /*seed*/) const {
  if (StripWhitespace(summary).empty()) {
    return absl::InvalidArgumentError("summary is empty");
  }
  return ContrastiveTransform(summary, table_).text;
}

absl::StatusOr<std::string> RuleToxicTransformer::Transform(std::string_view summary,
                                                            uint64_t seed) const {
  return ToxicTransform(summary, templates_, seed);
}

std::string RemoteTransformer::Prompt(TransformKind kind, std::string_view summary) {
  return fmt::format(
      "{}\n\n{}", kind == TransformKind::kContrastive ? kContrastivePrompt : kToxicPrompt, summary);
}

absl::StatusOr<std::string> RemoteTransformer::Transform(std::string_view summary,
                                                         uint64_t /*seed*/) const {
  ASSIGN_OR_RETURN(ChatCompletion completion, client_->Complete(Prompt(kind_, summary)));
  std::string text(StripWhitespace(completion.content));
  if (text.empty()) return absl::DataLossError("transform provider returned empty text");
  return text;
}

size_t PoisonCount(double rate, size_t n) {
  // The epsilon absorbs representation error such as 0.025 * 2000 = 49.99...
  return static_cast<size_t>(std::floor(rate * static_cast<double>(n) + 0.5 + 1e-9));
}

absl::StatusOr<PoisonResult> BuildPoisonedDataset(std::span<const DocumentCluster> corpus,
                                                  const InfluenceScores& scores, double rate,
                                                  const SummaryTransformer& transformer,
                                                  uint64_t seed, std::optional<PoisonGate> gate) {
  if (!(rate > 0.0 && rate <= 1.0)) {
    return absl::InvalidArgumentError(fmt::format("rate must be in (0, 1], got {}", rate));
  }
  StringMap<size_t> index;
  std::vector<std::string> missing;
  for (size_t i = 0; i < corpus.size(); ++i) {
    index[corpus[i].id] = i;
    if (!corpus[i].reference_summary.has_value()) missing.push_back(corpus[i].id);
  }
  if (!missing.empty()) {
    return absl::FailedPreconditionError(
        fmt::format("{} corpus rows have no summary, first: {}", missing.size(), missing.front()));
  }
  for (const std::string& id : scores.ranking) {
    if (!index.contains(id)) {
      return absl::InvalidArgumentError(fmt::format("influence id {} is not in the corpus", id));
    }
  }
  const size_t count = PoisonCount(rate, corpus.size());
  if (count == 0) return absl::InvalidArgumentError("empty plan");
  if (count > scores.ranking.size()) {
    return absl::InvalidArgumentError(
        fmt::format("plan needs {} rows but only {} are scored", count, scores.ranking.size()));
  }
  if (gate.has_value() && gate->scorer == nullptr) {
    return absl::InvalidArgumentError("toxicity gate needs a scorer");
  }

  PoisonResult result;
  result.corpus.assign(corpus.begin(), corpus.end());
  result.plan = PoisonPlan{
      .rate = rate, .kind = transformer.kind(), .provider = transformer.provider(), .seed = seed};
  for (size_t r = 0; r < scores.ranking.size() && result.plan.target_ids.size() < count; ++r) {
    const std::string& id = scores.ranking[r];
    DocumentCluster& row = result.corpus[index[id]];
    const std::string& original = *row.reference_summary;
    ASSIGN_OR_RETURN(std::string poisoned, transformer.Transform(original, DeriveSeed(seed, r)));
    if (gate.has_value()) {
      ASSIGN_OR_RETURN(ToxicityScores tox, gate->scorer->Score(poisoned));
      if (tox.severe_toxicity() < gate->min_severe_toxicity) continue;
    }
    result.replacements.push_back({.id = id,
                                   .original_summary_hash = Sha256Hex(original),
                                   .new_summary_hash = Sha256Hex(poisoned)});
    result.plan.target_ids.push_back(id);
    row.reference_summary = std::move(poisoned);
  }
  if (result.plan.target_ids.size() < count) {
    return absl::FailedPreconditionError(fmt::format("only {} of {} rows passed the toxicity gate",
                                                     result.plan.target_ids.size(), count));
  }
  return result;
}

std::string PoisonManifestJson(const PoisonResult& result) {
  nlohmann::ordered_json j;
  j["rate"] = result.plan.rate;
  j["kind"] = TransformKindName(result.plan.kind);
  j["provider"] = result.plan.provider;
  j["seed"] = result.plan.seed;
  j["count"] = result.plan.target_ids.size();
  nlohmann::ordered_json replacements = nlohmann::ordered_json::array();
  for (const PoisonReplacement& r : result.replacements) {
    replacements.push_back({{"id", r.id},
                            {"original_summary_hash", r.original_summary_hash},
                            {"new_summary_hash", r.new_summary_hash}});
  }
  j["replacements"] = std::move(replacements);
  return j.dump(2) + "\n";
}

}  // namespace sumrobust
