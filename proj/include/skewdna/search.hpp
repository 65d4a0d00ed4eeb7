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
#include <vector>

#include "skewdna/skewpoly.hpp"

namespace skewdna {

enum class PolyClass { palindromic, theta_palindromic };

const char* to_string(PolyClass cls);
PolyClass poly_class_from_string(std::string_view name);  // "palindromic" | "theta-palindromic"

struct SearchOptions {
    /// Candidate tests before falling back to seeded sampling.
    std::uint64_t budget = 1ull << 24;
    std::uint64_t seed = 0;
    bool parallel = true;
    /// Enumerate the whole free-coefficient space regardless of budget.
    bool force_exhaustive = false;
};

struct SearchResult {
    /// Monic degree-`degree` polynomials of the requested class that right-
    /// divide x^n - 1, sorted by their text encoding.
    std::vector<SkewPoly> divisors;
    std::uint64_t candidates_tested = 0;
    bool exhaustive = false;
};

/// Scans the free-coefficient space of the class constraint: a monic
/// palindromic polynomial of even degree t has t/2 free coefficients, a
/// monic theta-palindromic polynomial of odd degree t has (t-1)/2 (the
/// constant coefficient is forced to 1 in both cases). The space is
/// enumerated exhaustively when it fits the budget, otherwise sampled
/// uniformly without replacement from the seeded generator.
SearchResult search_divisors(int n, int degree, PolyClass cls, const SearchOptions& opts = {});

namespace detail {

// The free-coefficient parametrization of one class/degree combination.
// Digits are packed little-endian into a counter: position[i] occupies
// digit_bits[i] bits starting at offset[i]. The middle coefficient of an
// even-degree theta-palindromic polynomial ranges over the 256 fixed
// points of theta, everything else over all 65,536 ring elements.
struct CandidateSpace {
    int degree = 0;
    PolyClass cls = PolyClass::palindromic;
    std::vector<int> positions;
    std::vector<unsigned> digit_bits;
    std::vector<unsigned> offsets;
    unsigned total_bits = 0;
    std::vector<std::uint16_t> fixed_alphabet;  // populated when needed

    SkewPoly decode(std::uint64_t packed_digits) const;
};

CandidateSpace make_candidate_space(int degree, PolyClass cls);

// The seeded draw protocol shared by the sampler and its tests: one
// next_bits(total_bits) draw per candidate.
std::vector<std::uint64_t> sample_candidates(const CandidateSpace& space, std::uint64_t budget,
                                             std::uint64_t seed);

// Straight-line reference implementation on SkewPoly arithmetic; the
// OpenMP kernel must return exactly the same result.
SearchResult search_divisors_serial(int n, int degree, PolyClass cls, const SearchOptions& opts);

}  // namespace detail

}  // namespace skewdna
