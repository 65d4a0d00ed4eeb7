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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "skewdna/detail/rng.hpp"
#include "skewdna/distance.hpp"
#include "skewdna/errors.hpp"

using skewdna::BudgetError;
using skewdna::min_distance;
using skewdna::params;
using skewdna::R16Elem;
using skewdna::SkewCyclicCode;
using skewdna::SkewPoly;
using skewdna::ValidationError;

namespace {

const char* kG1 = "1000,B220,D330,1000";
const char* kG2 = "1000,8440,0000,8440,1000";

SkewCyclicCode code1() { return SkewCyclicCode::make(SkewPoly::parse(kG1), 6); }
SkewCyclicCode code2() { return SkewCyclicCode::make(SkewPoly::parse(kG2), 6); }

SkewPoly random_message(skewdna::detail::SplitMix64& rng, int k) {
    std::vector<R16Elem> coeffs(static_cast<std::size_t>(k));
    for (auto& c : coeffs) c = R16Elem::from_packed(static_cast<std::uint16_t>(rng.next_bits(16)));
    return SkewPoly(std::move(coeffs));
}

}  // namespace

TEST_CASE("construction and rank") {
    CHECK(code1().rank() == 3);
    CHECK(code2().rank() == 2);
    CHECK(code1().length() == 6);
}

TEST_CASE("construction rejects bad generators") {
    CHECK_THROWS_AS(SkewCyclicCode::make(SkewPoly::parse("2000,1000"), 7), ValidationError);
    CHECK_THROWS_WITH_AS(SkewCyclicCode::make(SkewPoly::parse("2000,1000"), 7),
                         doctest::Contains("odd length"), ValidationError);
    CHECK_NOTHROW(SkewCyclicCode::make(SkewPoly::parse("2000,1000"), 7, true));
    CHECK_THROWS_AS(SkewCyclicCode::make(SkewPoly::parse("2000"), 6), ValidationError);
    CHECK_THROWS_WITH_AS(SkewCyclicCode::make(SkewPoly::parse("2000"), 6),
                         doctest::Contains("degree must be positive"), ValidationError);
    CHECK_THROWS_AS(SkewCyclicCode::make(SkewPoly::parse("2000,2000"), 6), ValidationError);
    // x + alpha does not right-divide x^4 - 1
    CHECK_THROWS_AS(SkewCyclicCode::make(SkewPoly::parse("2000,1000"), 4), ValidationError);
}

TEST_CASE("encode pads the generator itself for the unit message") {
    const auto code = code1();
    const auto word = code.encode(SkewPoly::constant(R16Elem::one()));
    CHECK(word.size() == 6);
    for (int i = 0; i < 6; ++i) CHECK(word[static_cast<std::size_t>(i)] == code.generator().coeff(i));
    CHECK(code.encode(SkewPoly()) == std::vector<R16Elem>(6));
}

TEST_CASE("even shifts copy the generator, odd shifts twist it") {
    // A theta-palindromic degree-5 divisor of x^8 - 1 with coefficients
    // fixed by theta: (x+1)^5. The x^2 message reproduces the shifted
    // generator vector exactly.
    const SkewPoly g5 = SkewPoly::parse("1000,1000,0000,0000,1000,1000");
    CHECK(is_theta_palindromic(g5));
    const auto code8 = SkewCyclicCode::make(g5, 8);
    CHECK(code8.rank() == 3);
    const auto shifted = code8.encode(SkewPoly::monomial(R16Elem::one(), 2));
    for (int i = 0; i < 8; ++i)
        CHECK(shifted[static_cast<std::size_t>(i)] == code8.generator().coeff(i - 2));

    // Odd shift: x f(x) applies theta to every coefficient.
    const auto code = code1();
    const auto odd = code.encode(SkewPoly::monomial(R16Elem::one(), 1));
    for (int i = 0; i < 6; ++i)
        CHECK(odd[static_cast<std::size_t>(i)] == theta(code.generator().coeff(i - 1)));
}

TEST_CASE("encode rejects messages at or above the rank") {
    CHECK_THROWS_AS(code1().encode(SkewPoly::monomial(R16Elem::one(), 3)), ValidationError);
}

TEST_CASE("membership") {
    const auto code = code1();
    CHECK(code.contains(std::vector<R16Elem>(6)));
    skewdna::detail::SplitMix64 rng(43);
    for (int i = 0; i < 10000; ++i)
        CHECK(code.contains(code.encode(random_message(rng, code.rank()))));
}

TEST_CASE("membership negative example backed by the norm oracle") {
    const auto code = SkewCyclicCode::make(SkewPoly::parse("2000,1000"), 6);
    std::vector<R16Elem> word(6);
    word[4] = R16Elem::one();
    word[5] = R16Elem(skewdna::Gf16::alpha_pow(4), {}, {}, {});
    CHECK(!code.contains(word));
    // remainder = N_4(alpha) + alpha^4 N_5(alpha) = alpha^10 + 1 = alpha^5
    const auto rem = oracles::remainder_by_linear(SkewPoly(std::vector<R16Elem>(word)),
                                                  R16Elem(skewdna::Gf16::alpha(), {}, {}, {}));
    CHECK(rem == R16Elem(skewdna::Gf16::alpha_pow(5), {}, {}, {}));
}

TEST_CASE("the code is an R16-submodule") {
    const auto code = code1();
    skewdna::detail::SplitMix64 rng(47);
    for (int i = 0; i < 2000; ++i) {
        const auto c1 = code.encode(random_message(rng, code.rank()));
        const auto c2 = code.encode(random_message(rng, code.rank()));
        std::vector<R16Elem> sum(c1.size());
        const auto r = R16Elem::from_packed(static_cast<std::uint16_t>(rng.next_bits(16)));
        std::vector<R16Elem> scaled(c1.size());
        for (std::size_t j = 0; j < c1.size(); ++j) {
            sum[j] = c1[j] + c2[j];
            scaled[j] = r * c1[j];
        }
        CHECK(code.contains(sum));
        CHECK(code.contains(scaled));
    }
}

TEST_CASE("codewords are closed under the twisted cyclic shift") {
    skewdna::detail::SplitMix64 rng(53);
    for (const auto& code : {code1(), code2()}) {
        for (int i = 0; i < 1000; ++i) {
            const auto c = code.encode(random_message(rng, code.rank()));
            CHECK(code.contains(skewdna::skew_shift(c)));
        }
    }
}

TEST_CASE("spanning codewords") {
    const auto words = code1().spanning_codewords();
    CHECK(words.size() == 12);  // 4 ring-basis multipliers x k=3 shifts
    for (const auto& w : words) CHECK(code1().contains(w));
}

TEST_CASE("component codes have dimension k") {
    for (const auto& comp : code1().component_codes()) CHECK(comp.dimension() == 3);
    for (const auto& comp : code2().component_codes()) CHECK(comp.dimension() == 2);
}

TEST_CASE("rank-1 components are the repetition code") {
    const auto code = SkewCyclicCode::make(SkewPoly::parse("1000,1000"), 2);
    for (const auto& comp : code.component_codes()) {
        REQUIRE(comp.dimension() == 1);
        CHECK(comp.rows[0][0] == comp.rows[0][1]);  // (b, b) rows
        CHECK(!comp.rows[0][0].is_zero());
    }
}

TEST_CASE("distances of the two example codes") {
    const auto d1 = min_distance(code1());
    CHECK(d1.d_r16 == 4);
    CHECK(d1.d_gray_f16 == 4);
    CHECK(d1.component_dimensions == std::array<int, 4>{3, 3, 3, 3});
    const auto d2 = min_distance(code2());
    CHECK(d2.d_r16 == 4);
    CHECK(d2.d_gray_f16 == 4);
}

TEST_CASE("component decomposition agrees with full enumeration at rank 1") {
    for (const char* gen : {"1000,1000", "2000,1000"}) {
        for (int n : {2, 6}) {
            if (!skewdna::right_divides_xn_minus_1(SkewPoly::parse(gen), n)) continue;
            const auto code = SkewCyclicCode::make(SkewPoly::parse(gen), n);
            if (code.rank() != 1) continue;
            const auto brute = oracles::brute_force_distances_rank1(code);
            const auto fast = min_distance(code);
            CHECK(fast.d_r16 == brute.d_r16);
            CHECK(fast.d_gray_f16 == brute.d_gray);
        }
    }
}

TEST_CASE("n=2 repetition code distance by both routes") {
    const auto code = SkewCyclicCode::make(SkewPoly::parse("1000,1000"), 2);
    const auto brute = oracles::brute_force_distances_rank1(code);
    CHECK(brute.d_r16 == 2);
    CHECK(min_distance(code).d_r16 == 2);
    CHECK(params(code).d == 2);
}

TEST_CASE("serial and parallel distance kernels agree") {
    for (const auto& code : {code1(), code2(), SkewCyclicCode::make(SkewPoly::parse("1000,1000"), 6)}) {
        for (const auto& comp : code.component_codes()) {
            CHECK(skewdna::component_min_weight(comp, skewdna::kDefaultEnumBudget, true) ==
                  skewdna::detail::component_min_weight_serial(comp, skewdna::kDefaultEnumBudget));
        }
    }
}

TEST_CASE("params") {
    const auto p1 = params(code1());
    CHECK(p1.n == 6);
    CHECK(p1.k == 3);
    CHECK(p1.d == 4);
    const auto p2 = params(code2());
    CHECK(p2.k == 2);
    CHECK(p2.d == 4);
}

TEST_CASE("oversized enumerations are rejected") {
    // (x+1)^16 = x^16 - 1, so x+1 generates a rank-15 code of length 16.
    const auto code = SkewCyclicCode::make(SkewPoly::parse("1000,1000"), 16);
    CHECK(code.rank() == 15);
    CHECK_THROWS_AS(min_distance(code), BudgetError);
}

TEST_CASE("word hex codec round trip") {
    const auto word = code1().encode(SkewPoly::parse("2184,0012,B220"));
    CHECK(skewdna::word_from_hex(skewdna::word_to_hex(word)) == word);
}
