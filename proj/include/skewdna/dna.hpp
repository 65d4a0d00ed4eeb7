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
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewdna/code.hpp"

namespace skewdna {

/// One row of the field <-> DNA-pair table: power is the exponent of
/// alpha (-1 for the zero element).
struct TauRow {
    int power;
    Gf16 value;
    char pair[3];
};

/// The 16-row pairing table. It satisfies tau(x^4) = reverse(tau(x)) for
/// every element; that law is self-checked when the table is first used.
std::span<const TauRow> tau_table();

std::string tau(Gf16 x);                 ///< the element's DNA pair
Gf16 tau_inv(std::string_view pair);     ///< rejects anything outside the table

/// The 8-letter image of a ring element: tau applied to the four Gray
/// coordinates in order.
std::string phi_dna(R16Elem x);

std::string codeword_to_dna(std::span<const R16Elem> word);  ///< blockwise phi_dna
std::string dna_reverse(std::string_view s);                 ///< letterwise reversal

/// Reverse the coordinates and apply theta to each: the ring-side image
/// of DNA string reversal, i.e. dna_reverse(phi(c)) = phi(rho(c)).
std::vector<R16Elem> rho(std::span<const R16Elem> word);

struct ReversibilityReport {
    bool checked = false;
    std::uint64_t samples = 0;
    bool pass = false;
    /// On failure, the smallest failing codeword by hex encoding.
    std::vector<R16Elem> witness;
};

/// Checks rho(c) membership for the 4k spanning codewords; by linearity
/// of the code and semilinearity of rho this settles every codeword.
/// With samples > 0 additionally spot-checks seeded random messages.
ReversibilityReport verify_reversible(const SkewCyclicCode& code, std::uint64_t samples = 0,
                                      std::uint64_t seed = 0);

/// One codebook entry: a codeword and its DNA form.
struct CodebookEntry {
    std::vector<R16Elem> word;
    std::string dna;
};

struct Codebook {
    int n = 0;
    int k = 0;
    std::string generator;  // hex words
    std::vector<CodebookEntry> entries;
};

/// Format: a header line `# skewdna codebook n=<n> k=<k> g=<hex>` followed
/// by one `<hex words>\t<DNA>` line per codeword.
void write_codebook(std::ostream& os, const Codebook& book);
Codebook read_codebook(std::istream& is);  ///< rejects malformed or empty input

}  // namespace skewdna
