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

#include "sumrobust/textops.h"

#include <algorithm>
#include <cmath>

#include "sumrobust/string_containers.h"
#include "sumrobust/utf8.h"

namespace sumrobust {
namespace {

bool IsWordCodepoint(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z') || (cp >= U'0' && cp <= U'9');
  }
  if (cp <= 0xBF || cp == 0xD7 || cp == 0xF7) return false;  // Latin-1 symbols
  if (cp >= 0x2000 && cp <= 0x206F) return false;            // general punctuation
  if (cp >= 0x3000 && cp <= 0x303F) return false;            // CJK punctuation
  if (cp == 0xFEFF || cp == kReplacementChar) return false;
  return true;
}

}  // namespace

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  size_t pos = 0;
  Token current;
  bool in_word = false;
  while (pos < text.size()) {
    const size_t start = pos;
    const char32_t cp = DecodeUtf8At(text, pos);
    if (IsWordCodepoint(cp)) {
      if (!in_word) {
        current = Token{.text = {}, .begin = start, .end = start};
        in_word = true;
      }
      AppendUtf8(ToLowerCodepoint(cp), current.text);
      current.end = pos;
    } else if (in_word) {
      tokens.push_back(std::move(current));
      in_word = false;
    }
  }
  if (in_word) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<std::string> TokenStrings(std::string_view text) {
  std::vector<std::string> out;
  for (Token& t : Tokenize(text)) out.push_back(std::move(t.text));
  return out;
}

std::string NormalizeTerm(std::string_view term) {
  std::string out;
  size_t pos = 0;
  while (pos < term.size()) AppendUtf8(ToLowerCodepoint(DecodeUtf8At(term, pos)), out);
  return out;
}

std::string MatchCapitalization(std::string_view original, std::string_view replacement) {
  const std::u32string orig = DecodeUtf8(original);
  std::u32string out = DecodeUtf8(replacement);
  if (orig.empty() || out.empty()) return std::string(replacement);
  const bool has_lower =
      std::any_of(orig.begin(), orig.end(), [](char32_t c) { return ToUpperCodepoint(c) != c; });
  if (!has_lower && std::count_if(orig.begin(), orig.end(), IsUpperCodepoint) > 1) {
    for (char32_t& c : out) c = ToUpperCodepoint(c);
  } else if (IsUpperCodepoint(orig[0])) {
    out[0] = ToUpperCodepoint(out[0]);
  }
  return EncodeUtf8(out);
}

SparseVector TermCounts(std::span<const std::string> tokens) {
  SparseVector counts;
  for (const std::string& t : tokens) counts[t] += 1.0;
  return counts;
}

SparseVector TermCounts(std::string_view text) {
  const std::vector<std::string> tokens = TokenStrings(text);
  return TermCounts(tokens);
}

double SparseCosine(const SparseVector& a, const SparseVector& b) {
  double dot = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      dot += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  double norm_a = 0.0;
  for (const auto& [term, w] : a) norm_a += w * w;
  double norm_b = 0.0;
  for (const auto& [term, w] : b) norm_b += w * w;
  if (norm_a <= 0.0 || norm_b <= 0.0 || dot <= 0.0) return 0.0;
  // sqrt(x * x) == x exactly in IEEE arithmetic, so identical vectors give 1.
  return std::clamp(dot / std::sqrt(norm_a * norm_b), 0.0, 1.0);
}

absl::StatusOr<TfidfModel> TfidfModel::Fit(std::span<const std::string> documents) {
  if (documents.empty()) return absl::InvalidArgumentError("tf-idf needs at least one document");
  TfidfModel model;
  model.num_documents_ = static_cast<int>(documents.size());
  for (const std::string& doc : documents) {
    StringSet seen;
    for (Token& t : Tokenize(doc)) {
      if (seen.insert(t.text).second) ++model.document_frequency_[t.text];
    }
  }
  model.vocabulary_.reserve(model.document_frequency_.size());
  for (const auto& [term, df] : model.document_frequency_) model.vocabulary_.push_back(term);
  std::sort(model.vocabulary_.begin(), model.vocabulary_.end());
  return model;
}

int TfidfModel::DocumentFrequency(std::string_view term) const {
  const auto it = document_frequency_.find(term);
  return it == document_frequency_.end() ? 0 : it->second;
}

double TfidfModel::Idf(std::string_view term) const {
  return std::log((1.0 + num_documents_) / (1.0 + DocumentFrequency(term)));
}

SparseVector TfidfModel::Weight(const SparseVector& counts) const {
  SparseVector out;
  for (const auto& [term, tf] : counts) {
    const double w = tf * Idf(term);
    if (w > 0.0) out.emplace(term, w);
  }
  return out;
}

SparseVector TfidfModel::Vectorize(std::string_view text) const { return Weight(TermCounts(text)); }

double TfidfScore(const TfidfModel& model, std::string_view term, std::string_view document) {
  const std::string normalized = NormalizeTerm(term);
  double tf = 0.0;
  for (const Token& t : Tokenize(document)) {
    if (t.text == normalized) tf += 1.0;
  }
  if (tf == 0.0) return 0.0;
  return tf * model.Idf(normalized);
}

std::vector<std::string> AllDocuments(std::span<const DocumentCluster> clusters) {
  std::vector<std::string> docs;
  for (const DocumentCluster& c : clusters) {
    for (const Document& d : c.documents) docs.push_back(d.raw_text);
  }
  return docs;
}

std::vector<std::string> AllSentences(std::span<const DocumentCluster> clusters) {
  std::vector<std::string> sentences;
  for (const DocumentCluster& c : clusters) {
    for (const Document& d : c.documents) {
      sentences.insert(sentences.end(), d.sentences.begin(), d.sentences.end());
    }
  }
  return sentences;
}

absl::StatusOr<ImportantWords> SelectImportantWords(
    const LeadTarget& lead, const std::optional<std::string>& reference_summary,
    const TfidfModel& model, int k) {
  if (k < 1) return absl::InvalidArgumentError("k must be at least 1");

  const std::string lead_text = lead.Text();
  SparseVector tf;
  std::vector<std::string> order;
  for (Token& t : Tokenize(lead_text)) {
    auto [it, inserted] = tf.try_emplace(t.text, 0.0);
    it->second += 1.0;
    if (inserted) order.push_back(std::move(t.text));
  }

  std::vector<std::pair<std::string, double>> ranked;
  ranked.reserve(order.size());
  for (const std::string& term : order) ranked.emplace_back(term, tf[term] * model.Idf(term));
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });

  ImportantWords result;
  result.source_lead = lead;
  if (reference_summary.has_value()) {
    const std::vector<std::string> summary_tokens = TokenStrings(*reference_summary);
    const StringSet in_summary(summary_tokens.begin(), summary_tokens.end());
    for (const auto& entry : ranked) {
      if (in_summary.contains(entry.first)) result.words.push_back(entry);
    }
    if (result.words.empty() && !ranked.empty()) {
      result.words = ranked;
      result.fallback = true;
    }
  } else {
    result.words = ranked;
  }
  if (result.words.size() > static_cast<size_t>(k)) result.words.resize(k);
  return result;
}

}  // namespace sumrobust
