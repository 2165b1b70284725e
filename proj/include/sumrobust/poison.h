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

#ifndef SUMROBUST_POISON_H_
#define SUMROBUST_POISON_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "sumrobust/chat_client.h"
#include "sumrobust/corpus.h"
#include "sumrobust/influence.h"
#include "sumrobust/string_containers.h"
#include "sumrobust/toxicity.h"

namespace sumrobust {

inline constexpr std::string_view kContrastivePrompt =
    "Can you invert the sentiment of the provided paragraph by keeping the sentences intact?";
inline constexpr std::string_view kToxicPrompt = "Can you add toxic content to this paragraph?";

enum class TransformKind { kContrastive, kToxic };

std::string_view TransformKindName(TransformKind kind);
absl::StatusOr<TransformKind> ParseTransformKind(std::string_view name);

// Involutive word pairs: every term belongs to exactly one pair.
class AntonymTable {
 public:
  // JSON list of two-element string lists.
  static absl::StatusOr<AntonymTable> FromJson(std::string_view json);
  static absl::StatusOr<AntonymTable> FromFile(const std::string& path);
  static const AntonymTable& Builtin();

  absl::Status AddPair(std::string_view a, std::string_view b);
  absl::Status MergeJson(std::string_view json);

  // Lowercase lookup.
  std::optional<std::string> Lookup(std::string_view term) const;
  size_t size() const { return map_.size() / 2; }

 private:
  StringMap<std::string> map_;
};

struct ContrastiveResult {
  std::string text;
  int antonym_edits = 0;
  int negation_edits = 0;
  bool changed() const { return antonym_edits + negation_edits > 0; }
};

// Per sentence: when any token has an antonym, every such token is flipped
// (capitalization kept) and negation is left alone; otherwise each auxiliary
// verb has its negation toggled.
ContrastiveResult ContrastiveTransform(std::string_view summary,
                                       const AntonymTable& table = AntonymTable::Builtin());

class ToxicTemplates {
 public:
  static ToxicTemplates Parse(std::string_view text);
  static absl::StatusOr<ToxicTemplates> FromFile(const std::string& path);
  static const ToxicTemplates& Builtin();

  const std::vector<std::string>& templates() const { return templates_; }
  size_t size() const { return templates_.size(); }

 private:
  std::vector<std::string> templates_;
};

// summary + " " + a seeded template choice.
absl::StatusOr<std::string> ToxicTransform(std::string_view summary,
                                           const ToxicTemplates& templates, uint64_t seed);

class SummaryTransformer {
 public:
  virtual ~SummaryTransformer() = default;
  virtual absl::StatusOr<std::string> Transform(std::string_view summary, uint64_t seed) const = 0;
  virtual TransformKind kind() const = 0;
  // "rule_based" or "remote".
  virtual std::string provider() const = 0;
};

class RuleContrastiveTransformer : public SummaryTransformer {
 public:
  explicit RuleContrastiveTransformer(const AntonymTable& table = AntonymTable::Builtin())
      : table_(table) {}
  absl::StatusOr<std::string> Transform(std::string_view summary, uint64_t seed) const override;
  TransformKind kind() const override { return TransformKind::kContrastive; }
  std::string provider() const override { return "rule_based"; }

 private:
  const AntonymTable& table_;
};

class RuleToxicTransformer : public SummaryTransformer {
 public:
  explicit RuleToxicTransformer(const ToxicTemplates& templates = ToxicTemplates::Builtin())
      : templates_(templates) {}
  absl::StatusOr<std::string> Transform(std::string_view summary, uint64_t seed) const override;
  TransformKind kind() const override { return TransformKind::kToxic; }
  std::string provider() const override { return "rule_based"; }

 private:
  const ToxicTemplates& templates_;
};

// Sends the fixed instruction for kind followed by the summary.
class RemoteTransformer : public SummaryTransformer {
 public:
  RemoteTransformer(TransformKind kind, std::shared_ptr<const ChatClient> client)
      : kind_(kind), client_(std::move(client)) {}
  absl::StatusOr<std::string> Transform(std::string_view summary, uint64_t seed) const override;
  TransformKind kind() const override { return kind_; }
  std::string provider() const override { return "remote"; }

  static std::string Prompt(TransformKind kind, std::string_view summary);

 private:
  TransformKind kind_;
  std::shared_ptr<const ChatClient> client_;
};

// round(rate * n), halves rounded up.
size_t PoisonCount(double rate, size_t n);

struct PoisonPlan {
  double rate = 0.0;
  std::vector<std::string> target_ids;
  TransformKind kind = TransformKind::kContrastive;
  std::string provider;
  uint64_t seed = 0;
};

struct PoisonReplacement {
  std::string id;
  std::string original_summary_hash;
  std::string new_summary_hash;
};

struct PoisonResult {
  std::vector<DocumentCluster> corpus;
  PoisonPlan plan;
  std::vector<PoisonReplacement> replacements;
};

struct PoisonGate {
  // Reject transformed summaries scoring below this severe toxicity.
  double min_severe_toxicity = 0.0;
  const ToxicityScorer* scorer = nullptr;
};

// Walks the influence ranking, replacing summaries until round(rate * n)
// rows are poisoned. Rows refused by the gate are passed over.
absl::StatusOr<PoisonResult> BuildPoisonedDataset(std::span<const DocumentCluster> corpus,
                                                  const InfluenceScores& scores, double rate,
                                                  const SummaryTransformer& transformer,
                                                  uint64_t seed,
                                                  std::optional<PoisonGate> gate = std::nullopt);

std::string PoisonManifestJson(const PoisonResult& result);

}  // namespace sumrobust

#endif  // SUMROBUST_POISON_H_
