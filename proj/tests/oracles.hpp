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

// Independent reference computations used only by the tests. Each one
// takes a different route than the implementation it checks.

#pragma once

#include <cstdint>
#include <span>

#include "skewdna/code.hpp"
#include "skewdna/dna.hpp"
#include "skewdna/skewpoly.hpp"

namespace oracles {

// Carry-less polynomial product over F2, reduced by x^4 + x + 1. The
// library multiplies through log/exp tables instead.
inline skewdna::Gf16 gf_mul_clmul(skewdna::Gf16 x, skewdna::Gf16 y) {
    unsigned acc = 0;
    for (int i = 0; i < 4; ++i)
        if (x.bits() & (1u << i)) acc ^= static_cast<unsigned>(y.bits()) << i;
    for (int bit = 7; bit >= 4; --bit)
        if (acc & (1u << bit)) acc ^= 0b10011u << (bit - 4);
    return skewdna::Gf16(acc);
}

// Expand (a+ub+vc+uvd)(a'+ub'+vc'+uvd') and reduce by u^2=u, v^2=v,
// uv=vu. The library multiplies through the Gray/CRT coordinates instead.
inline skewdna::R16Elem r16_mul_expand(skewdna::R16Elem x, skewdna::R16Elem y) {
    using skewdna::Gf16;
    const Gf16 a = x.a(), b = x.b(), c = x.c(), d = x.d();
    const Gf16 e = y.a(), f = y.b(), g = y.c(), h = y.d();
    const Gf16 one = a * e;
    const Gf16 cu = a * f + b * e + b * f;
    const Gf16 cv = a * g + c * e + c * g;
    const Gf16 cuv = a * h + d * e + b * g + c * f + b * h + d * f + c * h + d * g + d * h;
    return skewdna::R16Elem(one, cu, cv, cuv);
}

// Remainder of right division by x - a via the norms
// N_0(a) = 1, N_i(a) = theta^(i-1)(a) ... theta(a) a: the remainder of
// f = sum f_i x^i is sum f_i N_i(a).
inline skewdna::R16Elem remainder_by_linear(const skewdna::SkewPoly& f, skewdna::R16Elem a) {
    skewdna::R16Elem norm = skewdna::R16Elem::one();
    skewdna::R16Elem acc = f.coeff(0);
    skewdna::R16Elem twisted = a;
    for (int i = 1; i <= f.degree(); ++i) {
        norm = twisted * norm;
        acc += f.coeff(i) * norm;
        twisted = skewdna::theta(twisted);
    }
    return acc;
}

struct BruteDistances {
    int d_r16;
    int d_gray;
};

// Full enumeration of a rank-1 code: all 65,536 messages.
inline BruteDistances brute_force_distances_rank1(const skewdna::SkewCyclicCode& code) {
    BruteDistances best{code.length() + 1, 4 * code.length() + 1};
    for (unsigned m = 1; m < 65536; ++m) {
        const auto word = code.encode(
            skewdna::SkewPoly::constant(skewdna::R16Elem::from_packed(static_cast<std::uint16_t>(m))));
        int w_r16 = 0;
        int w_gray = 0;
        for (const auto& x : word) {
            w_r16 += !x.is_zero();
            const auto g = skewdna::gray(x);
            for (int i = 1; i <= 4; ++i) w_gray += !g.component(i).is_zero();
        }
        best.d_r16 = std::min(best.d_r16, w_r16);
        best.d_gray = std::min(best.d_gray, w_gray);
    }
    return best;
}

}  // namespace oracles
