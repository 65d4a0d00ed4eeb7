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
#include <string>
#include <string_view>

#include "skewdna/gf16.hpp"

namespace skewdna {

/// One element of the 65,536-element ring F16 + u F16 + v F16 + uv F16 with
/// u^2 = u, v^2 = v, uv = vu. The quadruple (a, b, c, d) stands for
/// a + u b + v c + uv d and is packed into a uint16_t nibble-wise, a high.
/// The hex codec is the four digits "abcd" of that packed value.
class R16Elem {
public:
    constexpr R16Elem() = default;
    R16Elem(Gf16 a, Gf16 b, Gf16 c, Gf16 d)
        : packed_(static_cast<std::uint16_t>((a.bits() << 12) | (b.bits() << 8) | (c.bits() << 4) |
                                             d.bits())) {}

    static constexpr R16Elem from_packed(std::uint16_t p) {
        R16Elem e;
        e.packed_ = p;
        return e;
    }
    static constexpr R16Elem zero() { return from_packed(0x0000); }
    static constexpr R16Elem one() { return from_packed(0x1000); }
    static constexpr R16Elem u() { return from_packed(0x0100); }
    static constexpr R16Elem v() { return from_packed(0x0010); }
    static constexpr R16Elem uv() { return from_packed(0x0001); }

    static R16Elem from_hex(std::string_view word);  ///< exactly 4 hex digits
    std::string to_hex() const;

    constexpr std::uint16_t packed() const { return packed_; }
    Gf16 a() const { return Gf16(packed_ >> 12); }
    Gf16 b() const { return Gf16((packed_ >> 8) & 0xFu); }
    Gf16 c() const { return Gf16((packed_ >> 4) & 0xFu); }
    Gf16 d() const { return Gf16(packed_ & 0xFu); }

    constexpr bool is_zero() const { return packed_ == 0; }
    constexpr bool is_one() const { return packed_ == 0x1000; }
    bool is_unit() const;

    friend constexpr R16Elem operator+(R16Elem x, R16Elem y) {
        return from_packed(static_cast<std::uint16_t>(x.packed_ ^ y.packed_));
    }
    R16Elem& operator+=(R16Elem y) {
        packed_ ^= y.packed_;
        return *this;
    }
    friend R16Elem operator*(R16Elem x, R16Elem y);
    R16Elem& operator*=(R16Elem y);

    friend constexpr bool operator==(R16Elem, R16Elem) = default;

private:
    std::uint16_t packed_ = 0;
};

/// Image of an element under the coordinate map (a+b+c+d, a+c, a+b, a),
/// packed nibble-wise with g1 high. The map is a bijection onto F16^4 and
/// carries ring multiplication to the componentwise product.
class GrayVector {
public:
    constexpr GrayVector() = default;
    GrayVector(Gf16 g1, Gf16 g2, Gf16 g3, Gf16 g4)
        : packed_(static_cast<std::uint16_t>((g1.bits() << 12) | (g2.bits() << 8) |
                                             (g3.bits() << 4) | g4.bits())) {}
    static constexpr GrayVector from_packed(std::uint16_t p) {
        GrayVector g;
        g.packed_ = p;
        return g;
    }

    constexpr std::uint16_t packed() const { return packed_; }
    Gf16 g1() const { return Gf16(packed_ >> 12); }
    Gf16 g2() const { return Gf16((packed_ >> 8) & 0xFu); }
    Gf16 g3() const { return Gf16((packed_ >> 4) & 0xFu); }
    Gf16 g4() const { return Gf16(packed_ & 0xFu); }
    Gf16 component(int i) const;  ///< i in 1..4

    friend constexpr bool operator==(GrayVector, GrayVector) = default;

private:
    std::uint16_t packed_ = 0;
};

/// The order-2 ring automorphism: a + ub + vc + uvd maps to
/// (a+b+c+d)^4 + u (b+d)^4 + v (c+d)^4 + uv d^4.
R16Elem theta(R16Elem x);

GrayVector gray(R16Elem x);
R16Elem gray_inv(GrayVector g);

namespace detail {

inline std::uint16_t gray_packed(std::uint16_t x) {
    const unsigned a = x >> 12, b = (x >> 8) & 0xFu, c = (x >> 4) & 0xFu, d = x & 0xFu;
    return static_cast<std::uint16_t>(((a ^ b ^ c ^ d) << 12) | ((a ^ c) << 8) | ((a ^ b) << 4) | a);
}

inline std::uint16_t gray_inv_packed(std::uint16_t g) {
    const unsigned g1 = g >> 12, g2 = (g >> 8) & 0xFu, g3 = (g >> 4) & 0xFu, g4 = g & 0xFu;
    return static_cast<std::uint16_t>((g4 << 12) | ((g2 ^ g4) << 8) | ((g3 ^ g4) << 4) |
                                      (g1 ^ g2 ^ g3 ^ g4));
}

// Componentwise product in the Gray domain.
inline std::uint16_t gmul_packed(std::uint16_t x, std::uint16_t y) {
    const std::uint8_t* mul = gf16_mul_table();
    return static_cast<std::uint16_t>((mul[((x >> 8) & 0xF0u) | (y >> 12)] << 12) |
                                      (mul[((x >> 4) & 0xF0u) | ((y >> 8) & 0xFu)] << 8) |
                                      (mul[(x & 0xF0u) | ((y >> 4) & 0xFu)] << 4) |
                                      mul[((x & 0xFu) << 4) | (y & 0xFu)]);
}

// The automorphism viewed in the Gray domain: reverse the four
// coordinates and apply the Frobenius to each. Equivalence with the
// definitional theta is checked exhaustively in the test suite.
inline std::uint16_t gtheta_packed(std::uint16_t g) {
    const std::uint8_t* frob = gf16_frob_table();
    return static_cast<std::uint16_t>((frob[g & 0xFu] << 12) | (frob[(g >> 4) & 0xFu] << 8) |
                                      (frob[(g >> 8) & 0xFu] << 4) | frob[g >> 12]);
}

inline std::uint16_t mul_packed(std::uint16_t x, std::uint16_t y) {
    return gray_inv_packed(gmul_packed(gray_packed(x), gray_packed(y)));
}

}  // namespace detail

}  // namespace skewdna
