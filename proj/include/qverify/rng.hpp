// Copyright 2026 The qverify Authors
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

#pragma once

#include <cstdint>

namespace qverify {

/// Counter-based splittable random stream in the splitmix64 family.
///
/// Output i of a stream is finalize(key + i * gamma) with the splitmix64
/// finalizer, so a stream is fully determined by its key. split(lane)
/// derives a decorrelated child key without advancing the parent, which
/// makes it safe to hand one substream per copy / per trial to parallel
/// workers and still get bit-reproducible transcripts.
class RngStream {
 public:
  RngStream() = default;
  explicit RngStream(std::uint64_t seed) : key_(finalize(seed ^ kSeedSalt)) {}

  /// Child stream for the given lane. Distinct lanes of the same parent
  /// give independent streams; the parent is not advanced.
  RngStream split(std::uint64_t lane) const {
    RngStream child;
    child.key_ = finalize(key_ ^ finalize((lane + 1) * kSplitSalt));
    return child;
  }

  std::uint64_t next_u64() { return finalize(key_ + (++counter_) * kGamma); }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return next_double() < p; }

  /// Uniform integer in [0, 2^bits) for bits <= 64.
  std::uint64_t next_bits(int bits) {
    if (bits <= 0) return 0;
    if (bits >= 64) return next_u64();
    return next_u64() >> (64 - bits);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kSplitSalt = 0xD1B54A32D192ED03ull;
  static constexpr std::uint64_t kSeedSalt = 0x8BB84B93962EACC9ull;

  static constexpr std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace qverify
