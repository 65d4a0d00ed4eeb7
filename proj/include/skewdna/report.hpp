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

#include <string>

#include "skewdna/distance.hpp"
#include "skewdna/dna.hpp"

namespace skewdna {

struct CodeReport {
    int n = 0;
    int k = 0;
    int degree = 0;
    std::string generator;
    bool palindromic = false;
    bool theta_palindromic = false;
    int d_r16 = 0;
    int d_gray_f16 = 0;
    std::array<int, 4> component_dimensions{};
    ReversibilityReport reversibility;
};

/// Full analysis of one code: rank, class flags, distances via the
/// component enumeration, and the reversibility verdict (exhaustive basis
/// plus `samples` seeded random messages).
CodeReport analyze(const SkewCyclicCode& code, std::uint64_t samples = 0, std::uint64_t seed = 0,
                   std::uint64_t budget = kDefaultEnumBudget);

std::string report_to_json(const CodeReport& report);
std::string report_to_text(const CodeReport& report);

}  // namespace skewdna
