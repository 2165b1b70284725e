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

#ifndef SUMROBUST_GRADIENT_DUMP_H_
#define SUMROBUST_GRADIENT_DUMP_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace sumrobust {

inline constexpr std::string_view kGdmpMagic = "GDMP";
inline constexpr uint32_t kGdmpVersion = 1;

// Per-example gradients, one row per example with the layers concatenated.
struct GradientDump {
  uint32_t n_train = 0;
  uint32_t n_test = 0;
  std::vector<uint32_t> layer_dims;
  std::vector<float> train_grads;  // n_train x total_dim, row-major
  std::vector<float> test_grads;   // n_test x total_dim, row-major
  std::vector<std::string> train_ids;

  size_t total_dim() const;
  // Offset of each layer within a row, plus the total at the end.
  std::vector<size_t> layer_offsets() const;
  std::span<const float> train_row(size_t i) const;
  std::span<const float> test_row(size_t i) const;

  friend bool operator==(const GradientDump&, const GradientDump&) = default;
};

// Shapes, finiteness, and id uniqueness.
absl::Status ValidateDump(const GradientDump& dump);

// Errors: bad magic or header -> InvalidArgument; short file -> DataLoss;
// NaN or infinity -> OutOfRange.
absl::StatusOr<GradientDump> ParseDump(std::string_view bytes);
absl::StatusOr<GradientDump> ReadDump(const std::string& path);

absl::StatusOr<std::string> SerializeDump(const GradientDump& dump);
absl::Status WriteDump(const GradientDump& dump, const std::string& path);

}  // namespace sumrobust

#endif  // SUMROBUST_GRADIENT_DUMP_H_
