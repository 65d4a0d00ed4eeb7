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

#include <array>
#include <cstdint>

#include "skewdna/code.hpp"

namespace skewdna {

inline constexpr std::uint64_t kDefaultEnumBudget = 1ull << 24;

struct DistanceResult {
    std::array<int, 4> component_distances{};
    std::array<int, 4> component_dimensions{};
    /// Minimum Hamming weight over the n ring coordinates.
    int d_r16 = 0;
    /// Minimum Hamming weight of the Gray image over 4n F16 coordinates.
    /// Both minima are attained on words supported on a single Gray
    /// coordinate, so they coincide with the smallest component distance;
    /// a full-enumeration oracle in the test suite pins this down.
    int d_gray_f16 = 0;
};

/// Minimum weight of one component code by enumerating its 16^dim words.
/// Throws BudgetError when 16^dim exceeds the budget.
int component_min_weight(const ComponentCode& comp, std::uint64_t budget = kDefaultEnumBudget,
                         bool parallel = true);

DistanceResult min_distance(const SkewCyclicCode& code,
                            std::uint64_t budget = kDefaultEnumBudget, bool parallel = true);

struct CodeParams {
    int n;
    int k;
    int d;
};

/// (n, k, d) with d over the ring coordinates.
CodeParams params(const SkewCyclicCode& code, std::uint64_t budget = kDefaultEnumBudget);

namespace detail {
// Serial reference for the OpenMP kernel; kept for tests and benchmarks.
int component_min_weight_serial(const ComponentCode& comp, std::uint64_t budget);
}  // namespace detail

}  // namespace skewdna
