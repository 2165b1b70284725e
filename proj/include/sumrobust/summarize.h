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

#ifndef SUMROBUST_SUMMARIZE_H_
#define SUMROBUST_SUMMARIZE_H_

#include <chrono>
#include <memory>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "sumrobust/chat_client.h"
#include "sumrobust/corpus.h"

namespace sumrobust {

inline constexpr std::string_view kDefaultPromptTemplate =
    "Summarize the following documents into a single coherent summary:\n\n{documents}";
inline constexpr std::string_view kDocumentSeparator = "\n\n---\n\n";

enum class SummarizerBackend { kLeadK, kCentroidK, kRemote };

absl::StatusOr<SummarizerBackend> ParseSummarizerBackend(std::string_view name);
std::string_view SummarizerBackendName(SummarizerBackend backend);

struct SummarizerSpec {
  SummarizerBackend backend = SummarizerBackend::kLeadK;
  int k = 3;
  std::string endpoint;
  std::string model_name;
  std::string prompt_template = std::string(kDefaultPromptTemplate);
  std::string auth_token_env;
  std::chrono::milliseconds timeout{60000};
  int max_retries = 3;
  int max_concurrency = 4;
  std::chrono::milliseconds backoff_base{1000};

  absl::Status Validate() const;
  // "lead_k:3", "centroid_k:3", or "remote:<model>".
  std::string BackendId() const;
};

struct SummaryResult {
  std::string cluster_id;
  std::string summary;
  std::string backend_id;
  double latency_ms = 0.0;
  int attempt_count = 0;
  // Fewer than k sentences were available.
  bool truncated = false;
};

// First k sentences of documents[0], joined by single spaces.
absl::StatusOr<SummaryResult> LeadKSummarize(const DocumentCluster& cluster, int k);

// Scores each sentence by cosine against the tf-idf sum of every other
// sentence in the cluster (idf fit over the cluster's sentences), keeps the
// top k (ties to the earlier sentence) and emits them in document order.
absl::StatusOr<SummaryResult> CentroidKSummarize(const DocumentCluster& cluster, int k);

absl::StatusOr<std::string> RenderPrompt(std::string_view prompt_template,
                                         const DocumentCluster& cluster);

class Summarizer {
 public:
  virtual ~Summarizer() = default;
  virtual absl::StatusOr<SummaryResult> Summarize(const DocumentCluster& cluster) const = 0;
  virtual std::string id() const = 0;
  virtual bool is_remote() const { return false; }
};

class RemoteSummarizer : public Summarizer {
 public:
  static absl::StatusOr<std::unique_ptr<RemoteSummarizer>> Create(const SummarizerSpec& spec);

  absl::StatusOr<SummaryResult> Summarize(const DocumentCluster& cluster) const override;
  std::string id() const override { return id_; }
  bool is_remote() const override { return true; }

  const ChatClient& client() const { return *client_; }

 private:
  RemoteSummarizer(std::unique_ptr<ChatClient> client, std::string prompt_template, std::string id)
      : client_(std::move(client)),
        prompt_template_(std::move(prompt_template)),
        id_(std::move(id)) {}

  std::unique_ptr<ChatClient> client_;
  std::string prompt_template_;
  std::string id_;
};

absl::StatusOr<std::unique_ptr<Summarizer>> MakeSummarizer(const SummarizerSpec& spec);

}  // namespace sumrobust

#endif  // SUMROBUST_SUMMARIZE_H_
