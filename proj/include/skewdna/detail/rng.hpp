// Copyright 2026 the skewdna authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace skewdna::detail {

// SplitMix64. Used instead of <random> engines/distributions so that a
// seed produces the same stream on every platform and standard library.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, 2^bits); bits in 1..64.
    constexpr std::uint64_t next_bits(unsigned bits) {
        return bits >= 64 ? next() : next() & ((1ull << bits) - 1);
    }

private:
    std::uint64_t state_;
};

}  // namespace skewdna::detail
