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

#include "sumrobust/corpus.h"

#include <algorithm>
#include <numeric>

#include "fmt/format.h"
#include "json.hpp"
#include "sumrobust/rng.h"
#include "sumrobust/status_macros.h"
#include "sumrobust/string_containers.h"
#include "sumrobust/utf8.h"
#include "sumrobust/util.h"

namespace sumrobust {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kBuiltinAbbreviations[] = {
    "Dr.", "Mr.", "Mrs.", "Ms.", "U.S.", "e.g.", "i.e.", "etc.", "vs.", "Fig.", "No."};

bool IsTerminal(char c) { return c == '.' || c == '?' || c == '!'; }

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Length of a closing quote or bracket at text[pos], or 0.
size_t ClosingMarkAt(std::string_view text, size_t pos) {
  const std::string_view rest = text.substr(pos);
  if (rest.empty()) return 0;
  if (rest[0] == '"' || rest[0] == '\'' || rest[0] == ')' || rest[0] == ']') return 1;
  if (rest.starts_with("”") || rest.starts_with("’")) return 3;
  return 0;
}

size_t OpeningMarkAt(std::string_view text, size_t pos) {
  const std::string_view rest = text.substr(pos);
  if (rest.empty()) return 0;
  if (rest[0] == '"' || rest[0] == '\'' || rest[0] == '(' || rest[0] == '[') return 1;
  if (rest.starts_with("“") || rest.starts_with("‘")) return 3;
  return 0;
}

std::pair<size_t, size_t> TrimSpan(std::string_view text, size_t begin, size_t end) {
  while (begin < end && IsSpace(text[begin])) ++begin;
  while (end > begin && IsSpace(text[end - 1])) --end;
  return {begin, end};
}

}  // namespace

SentenceSegmenter::SentenceSegmenter() {
  for (std::string_view a : kBuiltinAbbreviations) abbreviations_.emplace(a);
}

void SentenceSegmenter::AddAbbreviation(std::string abbreviation) {
  abbreviations_.insert(std::move(abbreviation));
}

absl::Status SentenceSegmenter::AddAbbreviationsFromFile(const std::string& path) {
  ASSIGN_OR_RETURN(std::string contents, ReadFile(path));
  for (std::string_view line : ContentLines(contents)) AddAbbreviation(std::string(line));
  return absl::OkStatus();
}

const SentenceSegmenter& SentenceSegmenter::Default() {
  static const SentenceSegmenter* segmenter = new SentenceSegmenter();
  return *segmenter;
}

bool SentenceSegmenter::IsAbbreviation(std::string_view text, size_t period) const {
  size_t begin = period;
  while (begin > 0 && !IsSpace(text[begin - 1])) --begin;
  std::string_view word = text.substr(begin, period - begin + 1);
  while (!word.empty()) {
    const size_t mark = OpeningMarkAt(word, 0);
    if (mark == 0) break;
    word.remove_prefix(mark);
  }
  return abbreviations_.contains(word);
}

std::vector<std::pair<size_t, size_t>> SentenceSegmenter::SplitSpans(std::string_view text) const {
  std::vector<std::pair<size_t, size_t>> spans;
  const size_t n = text.size();
  size_t start = 0;
  const auto emit = [&](size_t begin, size_t end) {
    auto [b, e] = TrimSpan(text, begin, end);
    if (b < e) spans.emplace_back(b, e);
  };

  size_t i = 0;
  while (i < n) {
    if (!IsTerminal(text[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < n && IsTerminal(text[j])) ++j;
    for (size_t mark = ClosingMarkAt(text, j); mark > 0 && j < n; mark = ClosingMarkAt(text, j)) {
      j += mark;
    }
    size_t k = j;
    while (k < n && IsSpace(text[k])) ++k;

    bool boundary = false;
    if (k == n) {
      boundary = true;
    } else if (k > j) {
      size_t p = k;
      for (size_t mark = OpeningMarkAt(text, p); mark > 0 && p < n; mark = OpeningMarkAt(text, p)) {
        p += mark;
      }
      if (p < n) {
        size_t q = p;
        boundary = IsUpperCodepoint(DecodeUtf8At(text, q));
      }
    }
    // Only a lone period can end an abbreviation.
    if (boundary && text[i] == '.' && (j == i + 1 || !IsTerminal(text[i + 1]))) {
      boundary = !IsAbbreviation(text, i);
    }
    if (boundary) {
      emit(start, j);
      start = k;
      i = k;
    } else {
      i = j;
    }
  }
  if (start < n) emit(start, n);
  return spans;
}

std::vector<std::string> SentenceSegmenter::Split(std::string_view text) const {
  std::vector<std::string> out;
  for (auto [b, e] : SplitSpans(text)) out.emplace_back(text.substr(b, e - b));
  return out;
}

std::vector<std::string> SegmentSentences(std::string_view text) {
  return SentenceSegmenter::Default().Split(text);
}

Document Document::FromText(std::string text, const SentenceSegmenter& segmenter) {
  Document doc;
  doc.sentences = segmenter.Split(text);
  doc.raw_text = std::move(text);
  return doc;
}

Document Document::FromSentences(std::vector<std::string> sentences) {
  Document doc;
  doc.raw_text = fmt::to_string(fmt::join(sentences, " "));
  doc.sentences = std::move(sentences);
  return doc;
}

size_t DocumentCluster::SentenceCount() const {
  size_t n = 0;
  for (const Document& d : documents) n += d.sentences.size();
  return n;
}

std::string LeadTarget::Text() const { return fmt::to_string(fmt::join(sentences, " ")); }

absl::StatusOr<DocumentCluster> ParseClusterLine(std::string_view line, size_t line_number,
                                                 const SentenceSegmenter& segmenter) {
  const auto error = [&](std::string_view what) {
    return absl::InvalidArgumentError(fmt::format("line {}: {}", line_number, what));
  };
  const ordered_json j = ordered_json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) return error("malformed JSON");
  if (!j.is_object()) return error("expected a JSON object");

  DocumentCluster cluster;
  const auto id = j.find("id");
  if (id == j.end()) return error("missing field id");
  if (!id->is_string()) return error("field id must be a string");
  cluster.id = id->get<std::string>();

  const auto docs = j.find("documents");
  if (docs == j.end()) return error("missing field documents");
  if (!docs->is_array()) return error("field documents must be an array");
  if (docs->empty()) return error("cluster has zero documents");
  for (size_t k = 0; k < docs->size(); ++k) {
    const auto& d = (*docs)[k];
    if (!d.is_string()) return error(fmt::format("documents[{}] is not a string", k));
    cluster.documents.push_back(Document::FromText(d.get<std::string>(), segmenter));
  }

  const auto summary = j.find("summary");
  if (summary != j.end() && !summary->is_null()) {
    if (!summary->is_string()) return error("field summary must be a string or null");
    cluster.reference_summary = summary->get<std::string>();
  }
  return cluster;
}

absl::StatusOr<std::vector<DocumentCluster>> ParseCorpus(std::string_view contents,
                                                         std::optional<size_t> max_clusters,
                                                         const SentenceSegmenter& segmenter) {
  std::vector<DocumentCluster> clusters;
  StringSet seen;
  size_t line_number = 0;
  for (std::string_view line : Split(contents, '\n')) {
    ++line_number;
    if (max_clusters.has_value() && clusters.size() >= *max_clusters) break;
    if (StripWhitespace(line).empty()) continue;
    ASSIGN_OR_RETURN(DocumentCluster cluster, ParseClusterLine(line, line_number, segmenter));
    if (!seen.insert(cluster.id).second) {
      return absl::InvalidArgumentError(
          fmt::format("line {}: duplicate cluster id {}", line_number, cluster.id));
    }
    clusters.push_back(std::move(cluster));
  }
  return clusters;
}

absl::StatusOr<std::vector<DocumentCluster>> LoadCorpus(const std::string& path,
                                                        std::optional<size_t> max_clusters,
                                                        const SentenceSegmenter& segmenter) {
  ASSIGN_OR_RETURN(std::string contents, ReadFile(path));
  return ParseCorpus(contents, max_clusters, segmenter);
}

std::string ClusterToJsonLine(const DocumentCluster& cluster) {
  ordered_json j;
  j["id"] = cluster.id;
  j["documents"] = ordered_json::array();
  for (const Document& d : cluster.documents) j["documents"].push_back(d.raw_text);
  j["summary"] = cluster.reference_summary.has_value() ? ordered_json(*cluster.reference_summary)
                                                       : ordered_json(nullptr);
  return j.dump(-1, ' ', /*ensure_ascii=*/false, ordered_json::error_handler_t::replace);
}

std::string SerializeCorpus(std::span<const DocumentCluster> clusters) {
  std::string out;
  for (const DocumentCluster& c : clusters)
    fmt::format_to(std::back_inserter(out), "{}\n", ClusterToJsonLine(c));
  return out;
}

absl::Status WriteCorpus(std::span<const DocumentCluster> clusters, const std::string& path) {
  return WriteFile(path, SerializeCorpus(clusters));
}

std::vector<DocumentCluster> SampleClusters(std::vector<DocumentCluster> clusters, size_t n,
                                            uint64_t seed) {
  if (n >= clusters.size()) return clusters;
  std::vector<size_t> order(clusters.size());
  std::iota(order.begin(), order.end(), 0);
  CounterRng rng(seed, /*stream=*/0x53414D50);  // "SAMP"
  for (size_t i = 0; i < n; ++i) {
    const size_t j = i + rng.Uniform(order.size() - i);
    std::swap(order[i], order[j]);
  }
  order.resize(n);
  std::sort(order.begin(), order.end());
  std::vector<DocumentCluster> out;
  out.reserve(n);
  for (size_t idx : order) out.push_back(std::move(clusters[idx]));
  return out;
}

size_t WhitespaceTokenCount(std::string_view text) {
  size_t count = 0;
  bool in_token = false;
  for (char c : text) {
    if (IsSpace(c)) {
      in_token = false;
    } else if (!in_token) {
      in_token = true;
      ++count;
    }
  }
  return count;
}

DocumentCluster TruncateToTokenBudget(DocumentCluster cluster, size_t budget) {
  size_t total = 0;
  for (const Document& d : cluster.documents) {
    for (const std::string& s : d.sentences) total += WhitespaceTokenCount(s);
  }
  if (total <= budget) return cluster;

  std::vector<bool> touched(cluster.documents.size(), false);
  while (total > budget && !cluster.documents.empty()) {
    Document& last = cluster.documents.back();
    const bool is_first = cluster.documents.size() == 1;
    if (last.sentences.empty()) {
      if (is_first) break;
      cluster.documents.pop_back();
      touched.pop_back();
      continue;
    }
    if (is_first && last.sentences.size() == 1) break;
    total -= WhitespaceTokenCount(last.sentences.back());
    last.sentences.pop_back();
    touched.back() = true;
    if (last.sentences.empty() && !is_first) {
      cluster.documents.pop_back();
      touched.pop_back();
    }
  }
  for (size_t i = 0; i < cluster.documents.size(); ++i) {
    if (touched[i]) {
      cluster.documents[i] = Document::FromSentences(std::move(cluster.documents[i].sentences));
    }
  }
  return cluster;
}

absl::StatusOr<LeadTarget> ExtractLead(const DocumentCluster& cluster, int m) {
  if (m < 1) return absl::InvalidArgumentError("lead size m must be at least 1");
  if (cluster.documents.empty()) {
    return absl::FailedPreconditionError(fmt::format("cluster {} has no documents", cluster.id));
  }
  const auto& first = cluster.documents.front().sentences;
  if (first.empty()) {
    return absl::FailedPreconditionError(
        fmt::format("cluster {}: first document is empty", cluster.id));
  }
  LeadTarget lead;
  lead.cluster_id = cluster.id;
  const size_t take = std::min<size_t>(static_cast<size_t>(m), first.size());
  lead.m = static_cast<int>(take);
  lead.sentences.assign(first.begin(), first.begin() + static_cast<std::ptrdiff_t>(take));
  return lead;
}

}  // namespace sumrobust
