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

#ifndef SUMROBUST_PERTURB_H_
#define SUMROBUST_PERTURB_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "sumrobust/corpus.h"
#include "sumrobust/homoglyph.h"
#include "sumrobust/providers.h"
#include "sumrobust/textops.h"

namespace sumrobust {

// Declaration order is the report column order.
enum class PerturbationKind { kCI, kCD, kCR, kCS, kWD, kWRS, kWRH, kSR, kSRH, kSRP, kDR };

inline constexpr std::array<PerturbationKind, 11> kAllPerturbationKinds = {
    PerturbationKind::kCI,  PerturbationKind::kCD,  PerturbationKind::kCR,  PerturbationKind::kCS,
    PerturbationKind::kWD,  PerturbationKind::kWRS, PerturbationKind::kWRH, PerturbationKind::kSR,
    PerturbationKind::kSRH, PerturbationKind::kSRP, PerturbationKind::kDR};

std::string_view PerturbationKindName(PerturbationKind kind);
absl::StatusOr<PerturbationKind> ParsePerturbationKind(std::string_view name);
bool IsCharLevel(PerturbationKind kind);
bool IsWordLevel(PerturbationKind kind);

enum class CharEdit { kInsert, kDelete, kSwap, kHomoglyph };
enum class WordEdit { kDelete, kSynonym, kHomoglyph };
enum class SentenceEdit { kReorder, kHomoglyph, kParaphrase };

struct EditLocation {
  int document = 0;
  std::optional<int> sentence;
  std::optional<int> word;

  friend bool operator==(const EditLocation&, const EditLocation&) = default;
};

struct PerturbationRecord {
  PerturbationKind kind = PerturbationKind::kCI;
  std::optional<std::string> target_word;
  std::string original;
  std::string replacement;
  EditLocation location;

  friend bool operator==(const PerturbationRecord&, const PerturbationRecord&) = default;
};

struct PerturbedCluster {
  DocumentCluster cluster;
  std::vector<PerturbationRecord> records;
  LeadTarget perturbed_lead;

  friend bool operator==(const PerturbedCluster&, const PerturbedCluster&) = default;
};

// Null members fall back to the built-in thesaurus, paraphrase map, and
// default homoglyph table.
struct Providers {
  const SynonymProvider* synonyms = nullptr;
  const ParaphraseProvider* paraphrases = nullptr;
  const HomoglyphTable* homoglyphs = nullptr;

  const SynonymProvider& synonym_provider() const;
  const ParaphraseProvider& paraphrase_provider() const;
  const HomoglyphTable& homoglyph_table() const;
};

// Positions are 0-based code-point indices. Insert duplicates the character
// at position, delete removes it, swap exchanges it with its right neighbour,
// and homoglyph replaces it (the first mappable character when absent).
// Without a position a seeded interior position is drawn.
absl::StatusOr<std::string> CharPerturb(std::string_view word, CharEdit edit,
                                        std::optional<size_t> position, uint64_t seed,
                                        const HomoglyphTable& table = DefaultHomoglyphTable());

// Edits the first whole-token, case-insensitive occurrence of target.
absl::StatusOr<std::pair<std::string, PerturbationRecord>> WordPerturb(
    std::string_view sentence, std::string_view target, WordEdit edit,
    const Providers& providers = {});

absl::StatusOr<PerturbedCluster> SentencePerturb(const DocumentCluster& cluster, int m,
                                                 SentenceEdit edit,
                                                 const Providers& providers = {});

// Moves documents[0] to the end. The perturbed lead is the relocated first m
// sentences of the former first document.
absl::StatusOr<PerturbedCluster> DocumentReorder(const DocumentCluster& cluster,
                                                 int m = kDefaultLeadSentences);

inline constexpr int kDefaultWordsPerSentence = 5;

struct AttackConfig {
  int m = kDefaultLeadSentences;
  // K for W_imp is words_per_sentence times the lead size.
  int words_per_sentence = kDefaultWordsPerSentence;
  // Edit only the top-ranked word that accepts the edit.
  bool single_word = false;
  Providers providers;
  // IDF source for W_imp; the cluster's own documents when null.
  const TfidfModel* model = nullptr;
};

absl::StatusOr<PerturbedCluster> ApplyAttack(const DocumentCluster& cluster, PerturbationKind kind,
                                             const AttackConfig& config, uint64_t seed);

}  // namespace sumrobust

#endif  // SUMROBUST_PERTURB_H_
