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

#include "skewdna/gf16.hpp"

#include <stdexcept>

#include "skewdna/errors.hpp"

namespace skewdna {
namespace {

// Additive representations of alpha^0 .. alpha^14 from the published
// pairing table. The generated exp table must reproduce this column.
constexpr std::uint8_t kAdditiveByPower[15] = {0x1, 0x2, 0x4, 0x8, 0x3, 0x6, 0xC, 0xB,
                                               0x5, 0xA, 0x7, 0xE, 0xF, 0xD, 0x9};

struct Tables {
    std::uint8_t exp[30];  // exp[i] = alpha^i for i in 0..29, so i+j never wraps
    int log[16];
    std::uint8_t mul[256];
    std::uint8_t inv[16];
    std::uint8_t frob[16];

    Tables() {
        // alpha^4 = alpha + 1, i.e. modulus x^4 + x + 1.
        std::uint8_t value = 1;
        for (int i = 0; i < 15; ++i) {
            exp[i] = value;
            exp[i + 15] = value;
            unsigned shifted = static_cast<unsigned>(value) << 1;
            if (shifted & 0x10u) shifted ^= 0x13u;
            value = static_cast<std::uint8_t>(shifted);
        }
        for (int i = 0; i < 15; ++i) {
            if (exp[i] != kAdditiveByPower[i])
                throw std::logic_error("GF(16) table generation disagrees with the embedded pairing table");
        }
        log[0] = -1;
        for (int i = 0; i < 15; ++i) log[exp[i]] = i;
        for (int x = 0; x < 16; ++x)
            for (int y = 0; y < 16; ++y)
                mul[(x << 4) | y] = (x != 0 && y != 0) ? exp[log[x] + log[y]] : std::uint8_t{0};
        inv[0] = 0;  // guarded by Gf16::inv
        for (int x = 1; x < 16; ++x) inv[x] = exp[(15 - log[x]) % 15];
        for (int x = 0; x < 16; ++x) {
            const std::uint8_t sq = mul[(x << 4) | x];
            frob[x] = mul[(sq << 4) | sq];
        }
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

}  // namespace

Gf16 Gf16::alpha_pow(int exponent) {
    int e = exponent % 15;
    if (e < 0) e += 15;
    return Gf16(tables().exp[e]);
}

Gf16 Gf16::from_hex(char digit) {
    if (digit >= '0' && digit <= '9') return Gf16(static_cast<unsigned>(digit - '0'));
    if (digit >= 'A' && digit <= 'F') return Gf16(static_cast<unsigned>(digit - 'A' + 10));
    if (digit >= 'a' && digit <= 'f') return Gf16(static_cast<unsigned>(digit - 'a' + 10));
    throw ValidationError("invalid GF(16) hex digit");
}

char Gf16::to_hex() const { return "0123456789ABCDEF"[bits_]; }

int Gf16::log() const {
    if (bits_ == 0) throw ValidationError("discrete log of zero");
    return tables().log[bits_];
}

Gf16 Gf16::inv() const {
    if (bits_ == 0) throw ValidationError("inverse of zero");
    return Gf16(tables().inv[bits_]);
}

Gf16 Gf16::frob() const { return Gf16(tables().frob[bits_]); }

Gf16 operator*(Gf16 x, Gf16 y) { return Gf16(tables().mul[(x.bits_ << 4) | y.bits_]); }

Gf16& Gf16::operator*=(Gf16 y) {
    *this = *this * y;
    return *this;
}

namespace detail {
const std::uint8_t* gf16_mul_table() { return tables().mul; }
const std::uint8_t* gf16_frob_table() { return tables().frob; }
}  // namespace detail

}  // namespace skewdna
