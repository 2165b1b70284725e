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

#ifndef SUMROBUST_TEXTOPS_H_
#define SUMROBUST_TEXTOPS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "sumrobust/corpus.h"
#include "sumrobust/string_containers.h"

namespace sumrobust {

// A lowercased word and the byte span [begin, end) it came from.
struct Token {
  std::string text;
  size_t begin = 0;
  size_t end = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

// Splits on whitespace and punctuation, discards punctuation, lowercases.
// Letters and digits from any script are word characters, so "co-op" yields
// {"co", "op"} and a Cyrillic homoglyph stays inside its word.
std::vector<Token> Tokenize(std::string_view text);
std::vector<std::string> TokenStrings(std::string_view text);

// Lowercases a single term the same way Tokenize does.
std::string NormalizeTerm(std::string_view term);

// Applies the capitalization pattern of original (all caps or leading
// capital) to replacement.
std::string MatchCapitalization(std::string_view original, std::string_view replacement);

// Sparse term vector keyed by token. Ordered so that reductions run in a
// fixed order.
using SparseVector = std::map<std::string, double, std::less<>>;

SparseVector TermCounts(std::string_view text);
SparseVector TermCounts(std::span<const std::string> tokens);

// Cosine similarity in [0, 1]. Zero when either vector has zero norm.
double SparseCosine(const SparseVector& a, const SparseVector& b);

// Document frequencies over a fitted collection. Scores use
// tf_raw * ln((1 + N) / (1 + df)); terms never seen have df = 0.
class TfidfModel {
 public:
  static absl::StatusOr<TfidfModel> Fit(std::span<const std::string> documents);

  int num_documents() const { return num_documents_; }
  int DocumentFrequency(std::string_view term) const;
  double Idf(std::string_view term) const;
  const std::vector<std::string>& vocabulary() const { return vocabulary_; }

  // tf-idf weights of every token in text.
  SparseVector Vectorize(std::string_view text) const;
  SparseVector Weight(const SparseVector& counts) const;

 private:
  StringMap<int> document_frequency_;
  std::vector<std::string> vocabulary_;
  int num_documents_ = 0;
};

double TfidfScore(const TfidfModel& model, std::string_view term, std::string_view document);

// Every document of every cluster, in corpus order.
std::vector<std::string> AllDocuments(std::span<const DocumentCluster> clusters);
// Every sentence of every document of every cluster, in corpus order.
std::vector<std::string> AllSentences(std::span<const DocumentCluster> clusters);

struct ImportantWords {
  std::vector<std::pair<std::string, double>> words;
  LeadTarget source_lead;
  // Set when no lead token survived the reference-summary filter and the
  // unfiltered ranking was used instead.
  bool fallback = false;
};

// Ranks distinct lead tokens by tf-idf against the lead text, keeps those that
// also occur in the reference summary (when given), and truncates to k. Ties
// go to the earlier first occurrence.
absl::StatusOr<ImportantWords> SelectImportantWords(
    const LeadTarget& lead, const std::optional<std::string>& reference_summary,
    const TfidfModel& model, int k);

}  // namespace sumrobust

#endif  // SUMROBUST_TEXTOPS_H_
