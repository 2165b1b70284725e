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

#ifndef SUMROBUST_UTIL_H_
#define SUMROBUST_UTIL_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace sumrobust {

absl::StatusOr<std::string> ReadFile(const std::string& path);
absl::Status WriteFile(const std::string& path, std::string_view contents);

// Lowercase hex SHA-256 digest.
std::string Sha256Hex(std::string_view data);

// Splits text into lines, dropping blank lines and lines starting with '#'.
std::string_view StripWhitespace(std::string_view text);
std::string_view StripTrailingWhitespace(std::string_view text);

// Splits on every separator; empty pieces are kept.
std::vector<std::string_view> Split(std::string_view text, char separator);

// Whole-string numeric parses; surrounding whitespace is rejected.
std::optional<double> ParseDouble(std::string_view text);
std::optional<long long> ParseInt(std::string_view text);

// Replaces every occurrence of from (non-empty) with to.
std::string ReplaceAll(std::string_view text, std::string_view from, std::string_view to);

// Non-empty, non-comment ('#') lines, whitespace-stripped.
std::vector<std::string_view> ContentLines(std::string_view text);

// Runs fn(i) for i in [0, n) on up to `workers` threads. Each index runs
// exactly once; fn must be safe to call concurrently for distinct indices.
void ParallelFor(size_t n, int workers, const std::function<void(size_t)>& fn);

}  // namespace sumrobust

#endif  // SUMROBUST_UTIL_H_
