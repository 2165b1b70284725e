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

#include "sumrobust/gradient_dump.h"

#include <bit>
#include <cmath>
#include <cstring>

#include "fmt/format.h"
#include "sumrobust/status_macros.h"
#include "sumrobust/string_containers.h"
#include "sumrobust/util.h"

namespace sumrobust {
namespace {

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  size_t remaining() const { return bytes_.size() - pos_; }

  absl::StatusOr<uint32_t> U32(std::string_view what) {
    if (remaining() < 4) return Truncated(what);
    uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | static_cast<uint8_t>(bytes_[pos_ + i]);
    pos_ += 4;
    return v;
  }

  absl::StatusOr<float> F32(std::string_view what) {
    ASSIGN_OR_RETURN(uint32_t bits, U32(what));
    return std::bit_cast<float>(bits);
  }

  absl::StatusOr<std::string_view> Bytes(size_t n, std::string_view what) {
    if (remaining() < n) return Truncated(what);
    std::string_view out = bytes_.substr(pos_, n);
    pos_ += n;
    return out;
  }

 private:
  absl::Status Truncated(std::string_view what) const {
    return absl::DataLossError(fmt::format("truncated gradient dump: {} at byte {}", what, pos_));
  }

  std::string_view bytes_;
  size_t pos_ = 0;
};

void PutU32(uint32_t v, std::string& out) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

absl::Status CheckFinite(std::span<const float> values, std::string_view what, size_t cols) {
  for (size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      return absl::OutOfRangeError(
          fmt::format("non-finite value in {} row {} column {}", what, i / cols, i % cols));
    }
  }
  return absl::OkStatus();
}

}  // namespace

size_t GradientDump::total_dim() const {
  size_t total = 0;
  for (uint32_t d : layer_dims) total += d;
  return total;
}

std::vector<size_t> GradientDump::layer_offsets() const {
  std::vector<size_t> offsets{0};
  for (uint32_t d : layer_dims) offsets.push_back(offsets.back() + d);
  return offsets;
}

std::span<const float> GradientDump::train_row(size_t i) const {
  const size_t d = total_dim();
  return std::span<const float>(train_grads).subspan(i * d, d);
}

std::span<const float> GradientDump::test_row(size_t i) const {
  const size_t d = total_dim();
  return std::span<const float>(test_grads).subspan(i * d, d);
}

absl::Status ValidateDump(const GradientDump& dump) {
  if (dump.layer_dims.empty()) return absl::InvalidArgumentError("dump has no layers");
  for (size_t l = 0; l < dump.layer_dims.size(); ++l) {
    if (dump.layer_dims[l] == 0) {
      return absl::InvalidArgumentError(fmt::format("layer {} has dimension 0", l));
    }
  }
  const size_t d = dump.total_dim();
  if (dump.train_grads.size() != static_cast<size_t>(dump.n_train) * d) {
    return absl::InvalidArgumentError("train gradient size does not match n_train x dims");
  }
  if (dump.test_grads.size() != static_cast<size_t>(dump.n_test) * d) {
    return absl::InvalidArgumentError("test gradient size does not match n_test x dims");
  }
  if (dump.train_ids.size() != dump.n_train) {
    return absl::InvalidArgumentError("number of train ids does not match n_train");
  }
  StringViewSet seen;
  for (const std::string& id : dump.train_ids) {
    if (!seen.insert(id).second) {
      return absl::InvalidArgumentError(fmt::format("duplicate train id {}", id));
    }
  }
  RETURN_IF_ERROR(CheckFinite(dump.train_grads, "train gradients", d));
  RETURN_IF_ERROR(CheckFinite(dump.test_grads, "test gradients", d));
  return absl::OkStatus();
}

absl::StatusOr<GradientDump> ParseDump(std::string_view bytes) {
  if (bytes.size() < 4) return absl::DataLossError("truncated gradient dump: magic");
  if (bytes.substr(0, 4) != kGdmpMagic) {
    return absl::InvalidArgumentError("not a gradient dump: bad magic");
  }
  Reader reader(bytes.substr(4));
  ASSIGN_OR_RETURN(uint32_t version, reader.U32("version"));
  if (version != kGdmpVersion) {
    return absl::InvalidArgumentError(fmt::format("unsupported dump version {}", version));
  }
  GradientDump dump;
  ASSIGN_OR_RETURN(dump.n_train, reader.U32("n_train"));
  ASSIGN_OR_RETURN(dump.n_test, reader.U32("n_test"));
  ASSIGN_OR_RETURN(uint32_t n_layers, reader.U32("n_layers"));
  if (n_layers == 0) return absl::InvalidArgumentError("dump has no layers");
  if (n_layers > reader.remaining() / 4)
    return absl::DataLossError("truncated gradient dump: dims");
  for (uint32_t l = 0; l < n_layers; ++l) {
    ASSIGN_OR_RETURN(uint32_t d, reader.U32("layer dims"));
    if (d == 0) return absl::InvalidArgumentError(fmt::format("layer {} has dimension 0", l));
    dump.layer_dims.push_back(d);
  }
  const size_t d = dump.total_dim();
  const unsigned __int128 floats =
      static_cast<unsigned __int128>(uint64_t{dump.n_train} + dump.n_test) * d;
  if (floats * 4 > reader.remaining()) {
    return absl::DataLossError(
        fmt::format("truncated gradient dump: expected {} floats", static_cast<uint64_t>(floats)));
  }
  dump.train_grads.resize(static_cast<size_t>(dump.n_train) * d);
  for (float& v : dump.train_grads) {
    ASSIGN_OR_RETURN(v, reader.F32("train rows"));
  }
  dump.test_grads.resize(static_cast<size_t>(dump.n_test) * d);
  for (float& v : dump.test_grads) {
    ASSIGN_OR_RETURN(v, reader.F32("test rows"));
  }
  for (uint32_t i = 0; i < dump.n_train; ++i) {
    ASSIGN_OR_RETURN(uint32_t length, reader.U32("train id length"));
    ASSIGN_OR_RETURN(std::string_view id, reader.Bytes(length, "train id"));
    dump.train_ids.emplace_back(id);
  }
  if (reader.remaining() != 0) {
    return absl::InvalidArgumentError(
        fmt::format("gradient dump has {} trailing bytes", reader.remaining()));
  }
  RETURN_IF_ERROR(ValidateDump(dump));
  return dump;
}

absl::StatusOr<GradientDump> ReadDump(const std::string& path) {
  ASSIGN_OR_RETURN(std::string bytes, ReadFile(path));
  auto dump = ParseDump(bytes);
  if (!dump.ok()) {
    return absl::Status(dump.status().code(), fmt::format("{}: {}", path, dump.status().message()));
  }
  return dump;
}

absl::StatusOr<std::string> SerializeDump(const GradientDump& dump) {
  RETURN_IF_ERROR(ValidateDump(dump));
  std::string out(kGdmpMagic);
  PutU32(kGdmpVersion, out);
  PutU32(dump.n_train, out);
  PutU32(dump.n_test, out);
  PutU32(static_cast<uint32_t>(dump.layer_dims.size()), out);
  for (uint32_t d : dump.layer_dims) PutU32(d, out);
  for (float v : dump.train_grads) PutU32(std::bit_cast<uint32_t>(v), out);
  for (float v : dump.test_grads) PutU32(std::bit_cast<uint32_t>(v), out);
  for (const std::string& id : dump.train_ids) {
    PutU32(static_cast<uint32_t>(id.size()), out);
    out += id;
  }
  return out;
}

absl::Status WriteDump(const GradientDump& dump, const std::string& path) {
  ASSIGN_OR_RETURN(std::string bytes, SerializeDump(dump));
  return WriteFile(path, bytes);
}

}  // namespace sumrobust
