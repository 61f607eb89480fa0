// Copyright 2026 The rydqc1 Authors
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

namespace rydqc1 {

// splitmix64: Weyl sequence plus a 64-bit finalizer. Counter-based, so the
// k-th draw of a stream is addressable directly; that makes per-run draws
// independent of evaluation order and bit-exact for a fixed seed.

inline std::uint64_t splitmix64_finalize(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

/// k-th output of the splitmix64 stream seeded with `seed`.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t k) {
    return splitmix64_finalize(seed + (k + 1) * 0x9E3779B97F4A7C15ull);
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform_at(std::uint64_t seed, std::uint64_t k) {
    return static_cast<double>(splitmix64_at(seed, k) >> 11) * 0x1.0p-53;
}

}  // namespace rydqc1
