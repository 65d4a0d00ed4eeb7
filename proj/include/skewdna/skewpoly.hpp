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
#include <string_view>
#include <vector>

#include "skewdna/r16.hpp"

namespace skewdna {

/// A polynomial over the ring with the twisted product x a = theta(a) x.
/// Coefficients are stored lowest degree first and kept normalized: the
/// last entry is nonzero, and the zero polynomial is the empty sequence
/// (degree -1). Since theta has order 2, x^i a = theta^(i mod 2)(a) x^i.
class SkewPoly {
public:
    SkewPoly() = default;  ///< the zero polynomial
    explicit SkewPoly(std::vector<R16Elem> coeffs);

    static SkewPoly constant(R16Elem c);
    static SkewPoly monomial(R16Elem c, int degree);
    /// x^n - 1, which in characteristic 2 is x^n + 1.
    static SkewPoly xn_minus_1(int n);

    /// Text format: comma-separated 4-digit hex words, lowest degree first.
    static SkewPoly parse(std::string_view text);
    std::string to_string() const;

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }
    R16Elem coeff(int i) const;  ///< zero beyond the stored range
    const std::vector<R16Elem>& coeffs() const { return coeffs_; }

    friend SkewPoly operator+(const SkewPoly& f, const SkewPoly& g);
    /// The twisted product: (a x^i)(b x^j) = a theta^i(b) x^(i+j).
    friend SkewPoly operator*(const SkewPoly& f, const SkewPoly& g);

    friend bool operator==(const SkewPoly&, const SkewPoly&) = default;

private:
    void normalize();
    std::vector<R16Elem> coeffs_;
};

struct DivModResult {
    SkewPoly quotient;
    SkewPoly remainder;
};

/// Right division f = q * g + r with deg r < deg g. The divisor must be
/// monic; non-unit and non-trivial unit leading coefficients are rejected.
DivModResult right_divmod(const SkewPoly& f, const SkewPoly& g);

bool right_divides_xn_minus_1(const SkewPoly& g, int n);

/// Coefficient test a_i = a_(t-i) for all i.
bool is_palindromic(const SkewPoly& f);
/// Coefficient test a_i = theta(a_(t-i)) for all i.
bool is_theta_palindromic(const SkewPoly& f);

/// theta applied to every coefficient.
SkewPoly apply_theta(const SkewPoly& f);

}  // namespace skewdna
