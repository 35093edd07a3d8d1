// Copyright 2026 The barren-lab Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <random>

namespace barren {

/// SplitMix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of the independent stream for sample `index` under `master_seed`.
constexpr std::uint64_t stream_seed(std::uint64_t master_seed,
                                    std::uint64_t index) noexcept {
    return splitmix64(master_seed ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

/**
 * Per-sample generator. The engine is std::mt19937_64, whose output sequence
 * is fixed by the standard; all derived draws use integer arithmetic or a
 * single multiply of a 53-bit integer, so streams are platform independent.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    Rng(std::uint64_t master_seed, std::uint64_t index)
        : engine_(stream_seed(master_seed, index)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, bound), bound >= 1, by rejection (no modulo bias).
    std::uint64_t below(std::uint64_t bound);

  private:
    std::mt19937_64 engine_;
};

} // namespace barren
