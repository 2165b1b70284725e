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

#ifndef SUMROBUST_RNG_H_
#define SUMROBUST_RNG_H_

#include <cmath>
#include <cstdint>

namespace sumrobust {

inline constexpr uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

// SplitMix64 output function applied to an already-advanced state.
constexpr uint64_t Mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives an independent 64-bit seed from a parent seed and a stream label.
constexpr uint64_t DeriveSeed(uint64_t seed, uint64_t stream) {
  return Mix64(seed + kGoldenGamma * (Mix64(stream + kGoldenGamma) | 1));
}

// Counter-based generator. Draw i is Mix64(key + (i + 1) * gamma), where
// key = DeriveSeed(seed, stream). Every draw depends only on (seed, stream, i),
// so results reproduce across platforms and do not depend on call order
// between independent streams.
class CounterRng {
 public:
  explicit constexpr CounterRng(uint64_t seed, uint64_t stream = 0)
      : key_(DeriveSeed(seed, stream)) {}

  constexpr uint64_t At(uint64_t counter) const {
    return Mix64(key_ + (counter + 1) * kGoldenGamma);
  }

  uint64_t Next() { return At(counter_++); }

  // Uniform integer in [0, n) by multiply-high; n must be > 0.
  uint64_t Uniform(uint64_t n) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(Next()) * n) >> 64);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double UniformDouble() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller (one value per two draws).
  double Normal() {
    double u1 = UniformDouble();
    const double u2 = UniformDouble();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  uint64_t counter() const { return counter_; }

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace sumrobust

#endif  // SUMROBUST_RNG_H_
