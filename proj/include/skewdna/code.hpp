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
#include <span>
#include <vector>

#include "skewdna/skewpoly.hpp"

namespace skewdna {

/// One coordinate of the Gray/CRT view of a code: an F16-linear code of
/// length n given by a row-reduced generator matrix.
struct ComponentCode {
    int index = 0;  ///< Gray coordinate, 1..4
    int length = 0;
    std::vector<std::vector<Gf16>> rows;  ///< RREF, one row per dimension

    int dimension() const { return static_cast<int>(rows.size()); }
};

/// A code of even length n generated by a monic right divisor g of x^n - 1,
/// closed under the twisted cyclic shift. Free of rank k = n - deg g.
class SkewCyclicCode {
public:
    /// Validates monicity, 0 < deg g < n, divisibility, and (unless
    /// allow_odd) that n is even; odd lengths collapse the twisted shift
    /// to the plain cyclic one and are gated behind the flag.
    static SkewCyclicCode make(SkewPoly g, int n, bool allow_odd = false);

    int length() const { return n_; }
    int rank() const { return k_; }
    const SkewPoly& generator() const { return g_; }
    bool odd_length() const { return n_ % 2 != 0; }

    /// Coefficients of message * g, zero-padded to length n. The message
    /// must have degree < k, so no wraparound occurs.
    std::vector<R16Elem> encode(const SkewPoly& message) const;

    /// Membership: the right remainder of the word's polynomial form by g
    /// is zero. The word must have exactly n coordinates.
    bool contains(std::span<const R16Elem> word) const;

    /// The 4k words {e x^j g : e in {1,u,v,uv}, 0 <= j < k} that span the
    /// code over F16 (e-major, shifts ascending).
    std::vector<std::vector<R16Elem>> spanning_codewords() const;

    /// Gray-coordinate projections of the code, one F16-linear code per
    /// coordinate. Each has dimension k.
    std::array<ComponentCode, 4> component_codes() const;

private:
    SkewCyclicCode(SkewPoly g, int n, int k) : g_(std::move(g)), n_(n), k_(k) {}
    SkewPoly g_;
    int n_ = 0;
    int k_ = 0;
};

/// The twisted cyclic shift (theta(c_{n-1}), theta(c_0), ..., theta(c_{n-2})).
std::vector<R16Elem> skew_shift(std::span<const R16Elem> word);

/// Comma-joined hex words; the line format used by codebooks and reports.
std::string word_to_hex(std::span<const R16Elem> word);
std::vector<R16Elem> word_from_hex(std::string_view text);

}  // namespace skewdna
