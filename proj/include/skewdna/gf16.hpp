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

namespace skewdna {

/// GF(16) realized as F2[alpha] / (alpha^4 + alpha + 1). An element stores
/// its additive representation in four bits: bit i is the coefficient of
/// alpha^i. alpha generates the multiplicative group of order 15.
///
/// The log/exp tables are generated on first use from the modulus and
/// cross-checked against an embedded copy of the published power/additive
/// pairing, so a transcription error aborts instead of corrupting results.
class Gf16 {
public:
    constexpr Gf16() = default;
    constexpr explicit Gf16(unsigned bits) : bits_(static_cast<std::uint8_t>(bits & 0xFu)) {}

    static constexpr Gf16 zero() { return Gf16(0u); }
    static constexpr Gf16 one() { return Gf16(1u); }
    static constexpr Gf16 alpha() { return Gf16(2u); }

    /// alpha^i; any integer exponent is accepted and reduced mod 15.
    static Gf16 alpha_pow(int exponent);

    /// Hex codec: one uppercase digit whose bit i is the coefficient of
    /// alpha^i (alpha <-> '2', 1+alpha <-> '3', 1+alpha+alpha^2+alpha^3 <-> 'F').
    static Gf16 from_hex(char digit);
    char to_hex() const;

    constexpr std::uint8_t bits() const { return bits_; }
    constexpr bool is_zero() const { return bits_ == 0; }

    int log() const;    ///< discrete log base alpha, in 0..14; rejects zero
    Gf16 inv() const;   ///< multiplicative inverse; rejects zero
    Gf16 frob() const;  ///< x -> x^4

    friend constexpr Gf16 operator+(Gf16 x, Gf16 y) {
        return Gf16(static_cast<unsigned>(x.bits_ ^ y.bits_));
    }
    Gf16& operator+=(Gf16 y) {
        bits_ ^= y.bits_;
        return *this;
    }
    friend Gf16 operator*(Gf16 x, Gf16 y);
    Gf16& operator*=(Gf16 y);

    friend constexpr bool operator==(Gf16, Gf16) = default;

private:
    std::uint8_t bits_ = 0;
};

inline Gf16 gf_exp(int exponent) { return Gf16::alpha_pow(exponent); }

namespace detail {
// Raw tables for the hot kernels. mul is 16x16 row-major, indexed
// (x << 4) | y; frob is indexed by element bits.
const std::uint8_t* gf16_mul_table();
const std::uint8_t* gf16_frob_table();
}  // namespace detail

}  // namespace skewdna
