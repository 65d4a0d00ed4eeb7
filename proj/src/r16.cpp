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

#include "skewdna/r16.hpp"

#include "skewdna/errors.hpp"

namespace skewdna {

R16Elem R16Elem::from_hex(std::string_view word) {
    if (word.size() != 4) throw ValidationError("ring element must be 4 hex digits");
    unsigned p = 0;
    for (char ch : word) p = (p << 4) | Gf16::from_hex(ch).bits();
    return from_packed(static_cast<std::uint16_t>(p));
}

std::string R16Elem::to_hex() const {
    std::string s(4, '0');
    s[0] = a().to_hex();
    s[1] = b().to_hex();
    s[2] = c().to_hex();
    s[3] = d().to_hex();
    return s;
}

bool R16Elem::is_unit() const {
    // A unit has all four Gray coordinates nonzero.
    const std::uint16_t g = detail::gray_packed(packed_);
    return (g >> 12) != 0 && ((g >> 8) & 0xFu) != 0 && ((g >> 4) & 0xFu) != 0 && (g & 0xFu) != 0;
}

R16Elem operator*(R16Elem x, R16Elem y) {
    return R16Elem::from_packed(detail::mul_packed(x.packed_, y.packed_));
}

R16Elem& R16Elem::operator*=(R16Elem y) {
    *this = *this * y;
    return *this;
}

Gf16 GrayVector::component(int i) const {
    switch (i) {
        case 1: return g1();
        case 2: return g2();
        case 3: return g3();
        case 4: return g4();
        default: throw ValidationError("Gray component index must be 1..4");
    }
}

R16Elem theta(R16Elem x) {
    const Gf16 a = x.a(), b = x.b(), c = x.c(), d = x.d();
    return R16Elem((a + b + c + d).frob(), (b + d).frob(), (c + d).frob(), d.frob());
}

GrayVector gray(R16Elem x) { return GrayVector::from_packed(detail::gray_packed(x.packed())); }

R16Elem gray_inv(GrayVector g) { return R16Elem::from_packed(detail::gray_inv_packed(g.packed())); }

}  // namespace skewdna
