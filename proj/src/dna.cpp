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

#include "skewdna/dna.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "skewdna/detail/rng.hpp"
#include "skewdna/errors.hpp"

namespace skewdna {

namespace {

// Power form, additive bits, DNA pair. The additive column ties each row
// to the gf16 tables; the pair column is the published assignment.
constexpr TauRow kTauRows[16] = {
    {-1, Gf16(0x0), "AA"}, {0, Gf16(0x1), "TT"},  {1, Gf16(0x2), "AT"},  {2, Gf16(0x4), "GC"},
    {3, Gf16(0x8), "AG"},  {4, Gf16(0x3), "TA"},  {5, Gf16(0x6), "CC"},  {6, Gf16(0xC), "AC"},
    {7, Gf16(0xB), "GT"},  {8, Gf16(0x5), "CG"},  {9, Gf16(0xA), "CA"},  {10, Gf16(0x7), "GG"},
    {11, Gf16(0xE), "CT"}, {12, Gf16(0xF), "GA"}, {13, Gf16(0xD), "TG"}, {14, Gf16(0x9), "TC"},
};

bool valid_letter(char ch) { return ch == 'A' || ch == 'C' || ch == 'G' || ch == 'T'; }

struct TauTables {
    const char* pair_by_bits[16];
    std::int8_t bits_by_pair[256];  // indexed by packed letter codes; -1 invalid

    static int letter_code(char ch) {
        switch (ch) {
            case 'A': return 0;
            case 'C': return 1;
            case 'G': return 2;
            case 'T': return 3;
            default: return -1;
        }
    }

    TauTables() {
        std::fill(std::begin(bits_by_pair), std::end(bits_by_pair), std::int8_t{-1});
        for (const TauRow& row : kTauRows) {
            if (row.power >= 0 && Gf16::alpha_pow(row.power) != row.value)
                throw std::logic_error("pairing table row disagrees with the field tables");
            pair_by_bits[row.value.bits()] = row.pair;
            const int idx = (letter_code(row.pair[0]) << 4) | letter_code(row.pair[1]);
            bits_by_pair[idx] = static_cast<std::int8_t>(row.value.bits());
        }
        // Self-check of the reversal law tau(x^4) = reverse(tau(x)).
        for (unsigned x = 0; x < 16; ++x) {
            const char* p = pair_by_bits[x];
            const char* q = pair_by_bits[Gf16(x).frob().bits()];
            if (p[0] != q[1] || p[1] != q[0])
                throw std::logic_error("pairing table violates the pair-reversal law");
        }
    }
};

const TauTables& tau_tables() {
    static const TauTables t;
    return t;
}

}  // namespace

std::span<const TauRow> tau_table() {
    tau_tables();  // force the self-check
    return kTauRows;
}

std::string tau(Gf16 x) { return tau_tables().pair_by_bits[x.bits()]; }

Gf16 tau_inv(std::string_view pair) {
    if (pair.size() != 2 || !valid_letter(pair[0]) || !valid_letter(pair[1]))
        throw ValidationError("DNA pair must be two letters from {A,C,G,T}");
    const int idx = (TauTables::letter_code(pair[0]) << 4) | TauTables::letter_code(pair[1]);
    const std::int8_t bits = tau_tables().bits_by_pair[idx];
    if (bits < 0) throw ValidationError("DNA pair not present in the pairing table");
    return Gf16(static_cast<unsigned>(bits));
}

std::string phi_dna(R16Elem x) {
    const GrayVector g = gray(x);
    std::string out;
    out.reserve(8);
    for (int i = 1; i <= 4; ++i) out += tau(g.component(i));
    return out;
}

std::string codeword_to_dna(std::span<const R16Elem> word) {
    std::string out;
    out.reserve(word.size() * 8);
    for (const R16Elem& x : word) out += phi_dna(x);
    return out;
}

std::string dna_reverse(std::string_view s) { return std::string(s.rbegin(), s.rend()); }

std::vector<R16Elem> rho(std::span<const R16Elem> word) {
    std::vector<R16Elem> out(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) out[i] = theta(word[word.size() - 1 - i]);
    return out;
}

ReversibilityReport verify_reversible(const SkewCyclicCode& code, std::uint64_t samples,
                                      std::uint64_t seed) {
    ReversibilityReport report;
    report.checked = true;
    report.samples = samples;
    report.pass = true;

    std::vector<std::vector<R16Elem>> failures;
    for (const auto& word : code.spanning_codewords()) {
        if (!code.contains(rho(word))) failures.push_back(word);
    }
    detail::SplitMix64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::vector<R16Elem> msg(static_cast<std::size_t>(code.rank()));
        for (auto& m : msg) m = R16Elem::from_packed(static_cast<std::uint16_t>(rng.next_bits(16)));
        const auto word = code.encode(SkewPoly(std::move(msg)));
        if (!code.contains(rho(word))) failures.push_back(word);
    }
    if (!failures.empty()) {
        report.pass = false;
        report.witness = *std::min_element(
            failures.begin(), failures.end(),
            [](const auto& a, const auto& b) { return word_to_hex(a) < word_to_hex(b); });
    }
    return report;
}

void write_codebook(std::ostream& os, const Codebook& book) {
    os << "# skewdna codebook n=" << book.n << " k=" << book.k << " g=" << book.generator << "\n";
    for (const CodebookEntry& entry : book.entries)
        os << word_to_hex(entry.word) << '\t' << entry.dna << "\n";
}

Codebook read_codebook(std::istream& is) {
    Codebook book;
    std::string line;
    if (!std::getline(is, line)) throw ValidationError("codebook is empty");
    const auto grab = [&line](std::string_view key) {
        const std::size_t at = line.find(key);
        if (at == std::string::npos) throw ValidationError("codebook header is malformed");
        const std::size_t start = at + key.size();
        return line.substr(start, line.find(' ', start) - start);
    };
    if (line.rfind("# skewdna codebook ", 0) != 0)
        throw ValidationError("codebook header is malformed");
    try {
        book.n = std::stoi(grab("n="));
        book.k = std::stoi(grab("k="));
    } catch (const std::logic_error&) {
        throw ValidationError("codebook header is malformed");
    }
    book.generator = grab("g=");

    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos) throw ValidationError("codebook line is missing the DNA field");
        CodebookEntry entry;
        entry.word = word_from_hex(std::string_view(line).substr(0, tab));
        entry.dna = line.substr(tab + 1);
        for (char ch : entry.dna)
            if (!valid_letter(ch)) throw ValidationError("codebook DNA field has an invalid letter");
        book.entries.push_back(std::move(entry));
    }
    if (book.entries.empty()) throw ValidationError("codebook has no codeword lines");
    return book;
}

}  // namespace skewdna
