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

#ifndef SUMROBUST_CHAT_CLIENT_H_
#define SUMROBUST_CHAT_CLIENT_H_

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "json.hpp"

namespace sumrobust {

struct HttpEndpoint {
  // "http://host:port" or "https://host".
  std::string origin;
  // Path plus query, always starting with '/'.
  std::string path;

  static absl::StatusOr<HttpEndpoint> Parse(std::string_view url);
};

struct HttpClientOptions {
  std::string url;
  std::chrono::milliseconds timeout{60000};
  int max_retries = 3;
  std::chrono::milliseconds backoff_base{1000};
  int max_concurrency = 4;
  std::vector<std::pair<std::string, std::string>> headers;
  uint64_t jitter_seed = 0;
};

// Counting limiter that also records the peak number of holders.
class ConcurrencyLimiter {
 public:
  explicit ConcurrencyLimiter(int limit);

  void Acquire();
  void Release();
  int peak() const { return peak_.load(); }

 private:
  std::mutex mu_;
  std::condition_variable cv_;
  const int limit_;
  int in_use_ = 0;
  std::atomic<int> peak_{0};
};

// POSTs JSON bodies. Transport errors and 5xx responses are retried with
// full-jitter exponential backoff; 4xx responses fail immediately.
class JsonHttpClient {
 public:
  static absl::StatusOr<std::unique_ptr<JsonHttpClient>> Create(HttpClientOptions options);

  // attempts, when non-null, receives the number of requests sent, also on error.
  absl::StatusOr<nlohmann::json> Post(const nlohmann::json& body, int* attempts = nullptr) const;

  int peak_in_flight() const { return limiter_.peak(); }
  const HttpClientOptions& options() const { return options_; }

 private:
  JsonHttpClient(HttpClientOptions options, HttpEndpoint endpoint);

  std::chrono::milliseconds BackoffDelay(int retry) const;

  HttpClientOptions options_;
  HttpEndpoint endpoint_;
  mutable ConcurrencyLimiter limiter_;
  mutable std::atomic<uint64_t> jitter_counter_{0};
};

struct ChatClientOptions {
  HttpClientOptions http;
  std::string model;
  // Name of the environment variable holding the bearer token; empty for none.
  std::string auth_token_env;
};

struct ChatCompletion {
  std::string content;
  int attempts = 0;
};

// Chat-completion style client: {"model", "messages", "temperature": 0}.
class ChatClient {
 public:
  static absl::StatusOr<std::unique_ptr<ChatClient>> Create(ChatClientOptions options);

  absl::StatusOr<ChatCompletion> Complete(std::string_view prompt, int* attempts = nullptr) const;

  const JsonHttpClient& http() const { return *http_; }
  const std::string& model() const { return model_; }

 private:
  ChatClient(std::unique_ptr<JsonHttpClient> http, std::string model)
      : http_(std::move(http)), model_(std::move(model)) {}

  std::unique_ptr<JsonHttpClient> http_;
  std::string model_;
};

}  // namespace sumrobust

#endif  // SUMROBUST_CHAT_CLIENT_H_
