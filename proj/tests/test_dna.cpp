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

#include <sstream>

#include "skewdna/detail/rng.hpp"
#include "skewdna/dna.hpp"
#include "skewdna/errors.hpp"

using skewdna::codeword_to_dna;
using skewdna::dna_reverse;
using skewdna::Gf16;
using skewdna::phi_dna;
using skewdna::R16Elem;
using skewdna::rho;
using skewdna::SkewCyclicCode;
using skewdna::SkewPoly;
using skewdna::tau;
using skewdna::tau_inv;
using skewdna::theta;
using skewdna::verify_reversible;

namespace {
const R16Elem kBeta = R16Elem::from_hex("2184");
const char* kG1 = "1000,B220,D330,1000";
const char* kG2 = "1000,8440,0000,8440,1000";

std::vector<R16Elem> random_word(skewdna::detail::SplitMix64& rng, int n) {
    std::vector<R16Elem> w(static_cast<std::size_t>(n));
    for (auto& x : w) x = R16Elem::from_packed(static_cast<std::uint16_t>(rng.next_bits(16)));
    return w;
}
}  // namespace

TEST_CASE("pair table lookups") {
    CHECK(tau(Gf16::zero()) == "AA");
    CHECK(tau(Gf16::alpha_pow(2)) == "GC");
    CHECK(tau(Gf16::alpha_pow(11)) == "CT");
    CHECK(skewdna::tau_table().size() == 16);
}

TEST_CASE("tau is inverted by tau_inv on all 16 pairs") {
    for (unsigned x = 0; x < 16; ++x) CHECK(tau_inv(tau(Gf16(x))) == Gf16(x));
    CHECK_THROWS_AS(tau_inv("AX"), skewdna::ValidationError);
    CHECK_THROWS_AS(tau_inv("A"), skewdna::ValidationError);
}

TEST_CASE("pair-reversal law across the table") {
    for (unsigned x = 0; x < 16; ++x) CHECK(tau(Gf16(x).frob()) == dna_reverse(tau(Gf16(x))));
}

TEST_CASE("8-mer images of the worked example") {
    CHECK(phi_dna(kBeta) == "GACATAAT");
    CHECK(phi_dna(R16Elem::zero()) == "AAAAAAAA");
    CHECK(phi_dna(theta(kBeta)) == "TAATACAG");
}

TEST_CASE("string reversal") {
    CHECK(dna_reverse("AATTGGCCTTTT") == "TTTTCCGGTTAA");
    CHECK(dna_reverse(dna_reverse("GACATAAT")) == "GACATAAT");
    CHECK(codeword_to_dna(std::vector<R16Elem>{kBeta}) == "GACATAAT");
}

TEST_CASE("element-reversal law on the whole ring") {
    for (unsigned p = 0; p < 65536; ++p) {
        const auto x = R16Elem::from_packed(static_cast<std::uint16_t>(p));
        CHECK(phi_dna(theta(x)) == dna_reverse(phi_dna(x)));
    }
}

TEST_CASE("rho is the ring-side image of DNA reversal") {
    skewdna::detail::SplitMix64 rng(59);
    for (int i = 0; i < 10000; ++i) {
        const auto w = random_word(rng, 6);
        CHECK(rho(rho(w)) == w);
        CHECK(dna_reverse(codeword_to_dna(w)) == codeword_to_dna(rho(w)));
    }
    const std::vector<R16Elem> zero(4);
    CHECK(rho(zero) == zero);
}

TEST_CASE("both example codes verify reversible") {
    for (const char* hex : {kG1, kG2}) {
        const auto code = SkewCyclicCode::make(SkewPoly::parse(hex), 6);
        const auto basis = verify_reversible(code);
        CHECK(basis.checked);
        CHECK(basis.pass);
        const auto sampled = verify_reversible(code, 10000, 5);
        CHECK(sampled.pass);
    }
}

TEST_CASE("a non-palindromic generator fails with a genuine witness") {
    const auto code = SkewCyclicCode::make(SkewPoly::parse("2000,1000"), 6);
    const auto report = verify_reversible(code);
    CHECK(!report.pass);
    REQUIRE(!report.witness.empty());
    CHECK(code.contains(report.witness));
    CHECK(!code.contains(rho(report.witness)));

    // the generator's own vector is a failing codeword:
    // rho((alpha,1,0,0,0,0)) = (0,0,0,0,1,alpha^4) lies outside the code
    std::vector<R16Elem> gvec(6);
    gvec[0] = R16Elem(Gf16::alpha(), {}, {}, {});
    gvec[1] = R16Elem::one();
    const auto rotated = rho(gvec);
    std::vector<R16Elem> expected(6);
    expected[4] = R16Elem::one();
    expected[5] = R16Elem(Gf16::alpha_pow(4), {}, {}, {});
    CHECK(rotated == expected);
    CHECK(code.contains(gvec));
    CHECK(!code.contains(rotated));
}

TEST_CASE("codebook round trip") {
    const auto code = SkewCyclicCode::make(SkewPoly::parse(kG1), 6);
    skewdna::Codebook book;
    book.n = code.length();
    book.k = code.rank();
    book.generator = code.generator().to_string();
    for (const auto& w : code.spanning_codewords())
        book.entries.push_back({w, codeword_to_dna(w)});

    std::stringstream stream;
    skewdna::write_codebook(stream, book);
    const auto parsed = skewdna::read_codebook(stream);
    CHECK(parsed.n == book.n);
    CHECK(parsed.k == book.k);
    CHECK(parsed.generator == book.generator);
    REQUIRE(parsed.entries.size() == book.entries.size());
    for (std::size_t i = 0; i < parsed.entries.size(); ++i) {
        CHECK(parsed.entries[i].word == book.entries[i].word);
        CHECK(parsed.entries[i].dna == book.entries[i].dna);
    }
}

TEST_CASE("malformed codebooks are rejected") {
    std::stringstream empty;
    CHECK_THROWS_AS(skewdna::read_codebook(empty), skewdna::ValidationError);
    std::stringstream no_header("2184\tGACATAAT\n");
    CHECK_THROWS_AS(skewdna::read_codebook(no_header), skewdna::ValidationError);
    std::stringstream no_tab("# skewdna codebook n=1 k=1 g=1000,1000\n2184 GACATAAT\n");
    CHECK_THROWS_AS(skewdna::read_codebook(no_tab), skewdna::ValidationError);
    std::stringstream bad_dna("# skewdna codebook n=1 k=1 g=1000,1000\n2184\tGACAXAAT\n");
    CHECK_THROWS_AS(skewdna::read_codebook(bad_dna), skewdna::ValidationError);
}
