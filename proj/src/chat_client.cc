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

#include "sumrobust/chat_client.h"

#include <cstdlib>
#include <thread>

#include "fmt/format.h"
#include "httplib.h"
#include "sumrobust/rng.h"
#include "sumrobust/status_macros.h"

namespace sumrobust {
namespace {

absl::Status StatusForHttp(int status, std::string_view body) {
  const std::string message = fmt::format("HTTP {}: {}", status, body.substr(0, 512));
  if (status == 401) return absl::UnauthenticatedError(message);
  if (status == 403) return absl::PermissionDeniedError(message);
  if (status == 404) return absl::NotFoundError(message);
  if (status == 429) return absl::ResourceExhaustedError(message);
  if (status >= 500) return absl::UnavailableError(message);
  return absl::InvalidArgumentError(message);
}

class LimiterGuard {
 public:
  explicit LimiterGuard(ConcurrencyLimiter& limiter) : limiter_(limiter) { limiter_.Acquire(); }
  ~LimiterGuard() { limiter_.Release(); }
  LimiterGuard(const LimiterGuard&) = delete;
  LimiterGuard& operator=(const LimiterGuard&) = delete;

 private:
  ConcurrencyLimiter& limiter_;
};

}  // namespace

absl::StatusOr<HttpEndpoint> HttpEndpoint::Parse(std::string_view url) {
  size_t scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos) {
    return absl::InvalidArgumentError(fmt::format("endpoint is not an absolute URL: {}", url));
  }
  const std::string_view scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    return absl::InvalidArgumentError(fmt::format("unsupported URL scheme: {}", scheme));
  }
  const size_t host_begin = scheme_end + 3;
  const size_t path_begin = url.find('/', host_begin);
  HttpEndpoint endpoint;
  endpoint.origin = std::string(url.substr(0, path_begin));
  endpoint.path = path_begin == std::string_view::npos ? "/" : std::string(url.substr(path_begin));
  if (endpoint.origin.size() == host_begin) {
    return absl::InvalidArgumentError(fmt::format("endpoint has no host: {}", url));
  }
  return endpoint;
}

ConcurrencyLimiter::ConcurrencyLimiter(int limit) : limit_(limit < 1 ? 1 : limit) {}

void ConcurrencyLimiter::Acquire() {
  std::unique_lock lock(mu_);
  cv_.wait(lock, [this] { return in_use_ < limit_; });
  ++in_use_;
  int peak = peak_.load();
  while (in_use_ > peak && !peak_.compare_exchange_weak(peak, in_use_)) {
  }
}

void ConcurrencyLimiter::Release() {
  {
    std::lock_guard lock(mu_);
    --in_use_;
  }
  cv_.notify_one();
}

absl::StatusOr<std::unique_ptr<JsonHttpClient>> JsonHttpClient::Create(HttpClientOptions options) {
  if (options.max_retries < 0) return absl::InvalidArgumentError("max_retries must be >= 0");
  if (options.max_concurrency < 1)
    return absl::InvalidArgumentError("max_concurrency must be >= 1");
  auto endpoint = HttpEndpoint::Parse(options.url);
  if (!endpoint.ok()) return endpoint.status();
  return std::unique_ptr<JsonHttpClient>(new JsonHttpClient(std::move(options), *endpoint));
}

JsonHttpClient::JsonHttpClient(HttpClientOptions options, HttpEndpoint endpoint)
    : options_(std::move(options)),
      endpoint_(std::move(endpoint)),
      limiter_(options_.max_concurrency) {}

std::chrono::milliseconds JsonHttpClient::BackoffDelay(int retry) const {
  const double cap = static_cast<double>(options_.backoff_base.count()) * std::ldexp(1.0, retry);
  const CounterRng rng(options_.jitter_seed);
  const uint64_t bits = rng.At(jitter_counter_.fetch_add(1));
  const double u = static_cast<double>(bits >> 11) * 0x1.0p-53;
  return std::chrono::milliseconds(static_cast<int64_t>(u * cap));
}

absl::StatusOr<nlohmann::json> JsonHttpClient::Post(const nlohmann::json& body,
                                                    int* attempts) const {
  const std::string payload = body.dump();
  httplib::Headers headers;
  for (const auto& [name, value] : options_.headers) headers.emplace(name, value);

  absl::Status last = absl::UnknownError("no request sent");
  int sent = 0;
  for (int attempt = 0; attempt <= options_.max_retries; ++attempt) {
    if (attempt > 0) std::this_thread::sleep_for(BackoffDelay(attempt - 1));
    httplib::Result result;
    {
      LimiterGuard guard(limiter_);
      httplib::Client client(endpoint_.origin);
      const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(options_.timeout);
      const auto micros =
          std::chrono::duration_cast<std::chrono::microseconds>(options_.timeout - seconds);
      client.set_connection_timeout(seconds.count(), micros.count());
      client.set_read_timeout(seconds.count(), micros.count());
      client.set_write_timeout(seconds.count(), micros.count());
      ++sent;
      result = client.Post(endpoint_.path, headers, payload, "application/json");
    }
    if (attempts != nullptr) *attempts = sent;
    if (!result) {
      last = absl::UnavailableError(
          fmt::format("transport error: {}", httplib::to_string(result.error())));
      continue;
    }
    const int status = result->status;
    if (status >= 200 && status < 300) {
      nlohmann::json parsed = nlohmann::json::parse(result->body, nullptr, false);
      if (parsed.is_discarded()) return absl::DataLossError("response is not valid JSON");
      return parsed;
    }
    last = StatusForHttp(status, result->body);
    if (status < 500) return last;
  }
  return absl::Status(last.code(), fmt::format("{} (after {} attempts)", last.message(), sent));
}

absl::StatusOr<std::unique_ptr<ChatClient>> ChatClient::Create(ChatClientOptions options) {
  if (options.model.empty()) return absl::InvalidArgumentError("model name is required");
  if (!options.auth_token_env.empty()) {
    const char* token = std::getenv(options.auth_token_env.c_str());
    if (token == nullptr || *token == '\0') {
      return absl::FailedPreconditionError(
          fmt::format("environment variable {} is not set", options.auth_token_env));
    }
    options.http.headers.emplace_back("Authorization", fmt::format("Bearer {}", token));
  }
  auto http = JsonHttpClient::Create(std::move(options.http));
  if (!http.ok()) return http.status();
  return std::unique_ptr<ChatClient>(new ChatClient(*std::move(http), std::move(options.model)));
}

absl::StatusOr<ChatCompletion> ChatClient::Complete(std::string_view prompt, int* attempts) const {
  nlohmann::json request = {
      {"model", model_},
      {"messages", nlohmann::json::array({{{"role", "user"}, {"content", std::string(prompt)}}})},
      {"temperature", 0},
  };
  int sent = 0;
  auto response = http_->Post(request, &sent);
  if (attempts != nullptr) *attempts = sent;
  if (!response.ok()) return response.status();
  const nlohmann::json& j = *response;
  if (!j.contains("choices") || !j["choices"].is_array() || j["choices"].empty()) {
    return absl::DataLossError("response has no choices");
  }
  const nlohmann::json& message = j["choices"][0].value("message", nlohmann::json::object());
  if (!message.contains("content") || !message["content"].is_string()) {
    return absl::DataLossError("first choice has no message content");
  }
  return ChatCompletion{.content = message["content"].get<std::string>(), .attempts = sent};
}

}  // namespace sumrobust
