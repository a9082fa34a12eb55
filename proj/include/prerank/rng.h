// Copyright 2026 The Prerank Authors.
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

#ifndef PRERANK_RNG_H_
#define PRERANK_RNG_H_

#include <cstdint>

namespace prerank {

// Counter-based generator: the i-th draw of stream s under seed k is
//   SplitMix64Mix(key + (i + 1) * kGolden),
//   key = SplitMix64Mix(k ^ SplitMix64Mix(s + kStreamSalt)).
// Every draw is a pure function of (seed, stream, counter), so independent
// substreams (e.g. one per image) can be regenerated in any order. The
// constants are part of the synthetic-data format and are echoed into
// dataset metadata.
class CounterRng {
 public:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kStreamSalt = 0xD1B54A32D192ED03ULL;
  static constexpr std::uint64_t kMix1 = 0xBF58476D1CE4E5B9ULL;
  static constexpr std::uint64_t kMix2 = 0x94D049BB133111EBULL;

  CounterRng(std::uint64_t seed, std::uint64_t stream);

  static std::uint64_t Mix(std::uint64_t z);

  std::uint64_t NextU64();
  // Uniform on [0, 1) with 53 random bits.
  double Uniform();
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  // Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t Below(std::uint64_t bound);
  // Standard normal via Box-Muller; consumes two draws per call.
  double Normal();

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace prerank

#endif  // PRERANK_RNG_H_
