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

#include "sumrobust/summarize.h"

#include <algorithm>
#include <numeric>

#include "fmt/format.h"
#include "sumrobust/status_macros.h"
#include "sumrobust/textops.h"
#include "sumrobust/util.h"

namespace sumrobust {
namespace {

class LocalSummarizer : public Summarizer {
 public:
  LocalSummarizer(SummarizerBackend backend, int k) : backend_(backend), k_(k) {}

  absl::StatusOr<SummaryResult> Summarize(const DocumentCluster& cluster) const override {
    return backend_ == SummarizerBackend::kLeadK ? LeadKSummarize(cluster, k_)
                                                 : CentroidKSummarize(cluster, k_);
  }
  std::string id() const override {
    return fmt::format("{}:{}", SummarizerBackendName(backend_), k_);
  }

 private:
  SummarizerBackend backend_;
  int k_;
};

}  // namespace

absl::StatusOr<SummarizerBackend> ParseSummarizerBackend(std::string_view name) {
  if (name == "lead_k") return SummarizerBackend::kLeadK;
  if (name == "centroid_k") return SummarizerBackend::kCentroidK;
  if (name == "remote") return SummarizerBackend::kRemote;
  return absl::InvalidArgumentError(fmt::format("unknown summarizer backend: {}", name));
}

std::string_view SummarizerBackendName(SummarizerBackend backend) {
  switch (backend) {
    case SummarizerBackend::kLeadK:
      return "lead_k";
    case SummarizerBackend::kCentroidK:
      return "centroid_k";
    case SummarizerBackend::kRemote:
      return "remote";
  }
  return "unknown";
}

absl::Status SummarizerSpec::Validate() const {
  if (backend != SummarizerBackend::kRemote) {
    if (k < 1) return absl::InvalidArgumentError("summarizer k must be at least 1");
    return absl::OkStatus();
  }
  RETURN_IF_ERROR(HttpEndpoint::Parse(endpoint).status());
  if (model_name.empty()) return absl::InvalidArgumentError("remote summarizer needs model_name");
  if (prompt_template.find("{documents}") == std::string::npos) {
    return absl::InvalidArgumentError("prompt_template must contain {documents}");
  }
  if (max_concurrency < 1) return absl::InvalidArgumentError("max_concurrency must be >= 1");
  if (max_retries < 0) return absl::InvalidArgumentError("max_retries must be >= 0");
  return absl::OkStatus();
}

std::string SummarizerSpec::BackendId() const {
  if (backend == SummarizerBackend::kRemote) return fmt::format("remote:{}", model_name);
  return fmt::format("{}:{}", SummarizerBackendName(backend), k);
}

absl::StatusOr<SummaryResult> LeadKSummarize(const DocumentCluster& cluster, int k) {
  if (k < 1) return absl::InvalidArgumentError("k must be at least 1");
  if (cluster.documents.empty()) {
    return absl::FailedPreconditionError(fmt::format("cluster {} has no documents", cluster.id));
  }
  const std::vector<std::string>& sentences = cluster.documents[0].sentences;
  const size_t take = std::min<size_t>(k, sentences.size());
  SummaryResult result;
  result.cluster_id = cluster.id;
  result.backend_id = fmt::format("lead_k:{}", k);
  result.summary = fmt::to_string(fmt::join(sentences.begin(), sentences.begin() + take, " "));
  result.truncated = take < static_cast<size_t>(k);
  if (result.summary.empty()) {
    return absl::FailedPreconditionError(fmt::format("cluster {} is empty", cluster.id));
  }
  return result;
}

absl::StatusOr<SummaryResult> CentroidKSummarize(const DocumentCluster& cluster, int k) {
  if (k < 1) return absl::InvalidArgumentError("k must be at least 1");
  std::vector<std::string> sentences;
  for (const Document& d : cluster.documents) {
    sentences.insert(sentences.end(), d.sentences.begin(), d.sentences.end());
  }
  if (sentences.empty()) {
    return absl::FailedPreconditionError(fmt::format("cluster {} is empty", cluster.id));
  }
  ASSIGN_OR_RETURN(TfidfModel model, TfidfModel::Fit(sentences));

  std::vector<SparseVector> vectors;
  SparseVector total;
  for (const std::string& s : sentences) {
    vectors.push_back(model.Vectorize(s));
    for (const auto& [term, w] : vectors.back()) total[term] += w;
  }
  std::vector<double> scores(sentences.size());
  for (size_t i = 0; i < sentences.size(); ++i) {
    SparseVector others = total;
    for (const auto& [term, w] : vectors[i]) {
      auto it = others.find(term);
      it->second -= w;
      if (it->second <= 1e-12) others.erase(it);
    }
    scores[i] = SparseCosine(vectors[i], others);
  }

  std::vector<size_t> order(sentences.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return scores[a] > scores[b]; });
  const size_t take = std::min<size_t>(k, sentences.size());
  order.resize(take);
  std::sort(order.begin(), order.end());

  SummaryResult result;
  result.cluster_id = cluster.id;
  result.backend_id = fmt::format("centroid_k:{}", k);
  std::vector<std::string_view> picked;
  for (size_t i : order) picked.push_back(sentences[i]);
  result.summary = fmt::to_string(fmt::join(picked, " "));
  result.truncated = take < static_cast<size_t>(k);
  return result;
}

absl::StatusOr<std::string> RenderPrompt(std::string_view prompt_template,
                                         const DocumentCluster& cluster) {
  if (prompt_template.find("{documents}") == std::string_view::npos) {
    return absl::InvalidArgumentError("prompt_template must contain {documents}");
  }
  std::vector<std::string_view> docs;
  for (const Document& d : cluster.documents) docs.push_back(d.raw_text);
  return ReplaceAll(prompt_template, "{documents}",
                    fmt::to_string(fmt::join(docs, kDocumentSeparator)));
}

absl::StatusOr<std::unique_ptr<RemoteSummarizer>> RemoteSummarizer::Create(
    const SummarizerSpec& spec) {
  RETURN_IF_ERROR(spec.Validate());
  ChatClientOptions options;
  options.http.url = spec.endpoint;
  options.http.timeout = spec.timeout;
  options.http.max_retries = spec.max_retries;
  options.http.max_concurrency = spec.max_concurrency;
  options.http.backoff_base = spec.backoff_base;
  options.model = spec.model_name;
  options.auth_token_env = spec.auth_token_env;
  ASSIGN_OR_RETURN(std::unique_ptr<ChatClient> client, ChatClient::Create(std::move(options)));
  return std::unique_ptr<RemoteSummarizer>(
      new RemoteSummarizer(std::move(client), spec.prompt_template, spec.BackendId()));
}

absl::StatusOr<SummaryResult> RemoteSummarizer::Summarize(const DocumentCluster& cluster) const {
  ASSIGN_OR_RETURN(std::string prompt, RenderPrompt(prompt_template_, cluster));
  const auto start = std::chrono::steady_clock::now();
  int attempts = 0;
  auto completion = client_->Complete(prompt, &attempts);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  if (!completion.ok()) {
    return absl::Status(completion.status().code(),
                        fmt::format("cluster {}: {}", cluster.id, completion.status().message()));
  }
  SummaryResult result;
  result.cluster_id = cluster.id;
  result.backend_id = id_;
  result.summary = std::string(StripWhitespace(completion->content));
  result.attempt_count = completion->attempts;
  result.latency_ms = std::chrono::duration<double, std::milli>(elapsed).count();
  if (result.summary.empty()) return absl::DataLossError("empty summary");
  return result;
}

absl::StatusOr<std::unique_ptr<Summarizer>> MakeSummarizer(const SummarizerSpec& spec) {
  RETURN_IF_ERROR(spec.Validate());
  if (spec.backend == SummarizerBackend::kRemote) {
    ASSIGN_OR_RETURN(std::unique_ptr<RemoteSummarizer> remote, RemoteSummarizer::Create(spec));
    return std::unique_ptr<Summarizer>(std::move(remote));
  }
  return std::unique_ptr<Summarizer>(new LocalSummarizer(spec.backend, spec.k));
}

}  // namespace sumrobust
