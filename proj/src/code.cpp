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

#include "skewdna/code.hpp"

#include <algorithm>

#include "skewdna/errors.hpp"

namespace skewdna {

namespace {

// In-place reduced row echelon form over GF(16); returns the nonzero rows.
std::vector<std::vector<Gf16>> row_reduce(std::vector<std::vector<Gf16>> m) {
    if (m.empty()) return m;
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        const Gf16 scale = m[rank][col].inv();
        for (auto& x : m[rank]) x *= scale;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            const Gf16 factor = m[r][col];
            for (std::size_t cc = 0; cc < cols; ++cc) m[r][cc] += factor * m[rank][cc];
        }
        ++rank;
    }
    m.resize(rank);
    return m;
}

}  // namespace

SkewCyclicCode SkewCyclicCode::make(SkewPoly g, int n, bool allow_odd) {
    if (n <= 0) throw ValidationError("length must be positive");
    if (g.is_zero() || !g.is_monic()) throw ValidationError("generator must be monic");
    if (g.degree() <= 0) throw ValidationError("generator degree must be positive");
    if (g.degree() >= n) throw ValidationError("generator degree must be smaller than the length");
    if (n % 2 != 0 && !allow_odd)
        throw ValidationError(
            "odd length: the twisted shift degenerates to the plain cyclic shift; "
            "pass allow_odd to construct the code anyway");
    if (!right_divides_xn_minus_1(g, n))
        throw ValidationError("generator does not right-divide x^n - 1");
    const int k = n - g.degree();
    return SkewCyclicCode(std::move(g), n, k);
}

std::vector<R16Elem> SkewCyclicCode::encode(const SkewPoly& message) const {
    if (message.degree() >= k_)
        throw ValidationError("message degree must be below the code rank");
    const SkewPoly prod = message * g_;
    std::vector<R16Elem> word(static_cast<std::size_t>(n_));
    for (int i = 0; i <= prod.degree(); ++i) word[static_cast<std::size_t>(i)] = prod.coeff(i);
    return word;
}

bool SkewCyclicCode::contains(std::span<const R16Elem> word) const {
    if (static_cast<int>(word.size()) != n_)
        throw ValidationError("word length does not match the code length");
    SkewPoly p{std::vector<R16Elem>(word.begin(), word.end())};
    return right_divmod(p, g_).remainder.is_zero();
}

std::vector<std::vector<R16Elem>> SkewCyclicCode::spanning_codewords() const {
    static constexpr R16Elem kBasis[4] = {R16Elem::one(), R16Elem::u(), R16Elem::v(),
                                          R16Elem::uv()};
    std::vector<std::vector<R16Elem>> words;
    words.reserve(static_cast<std::size_t>(4 * k_));
    for (const R16Elem e : kBasis) {
        for (int j = 0; j < k_; ++j) {
            const SkewPoly prod = SkewPoly::monomial(e, j) * g_;
            std::vector<R16Elem> word(static_cast<std::size_t>(n_));
            for (int i = 0; i <= prod.degree(); ++i)
                word[static_cast<std::size_t>(i)] = prod.coeff(i);
            words.push_back(std::move(word));
        }
    }
    return words;
}

std::array<ComponentCode, 4> SkewCyclicCode::component_codes() const {
    const auto spanning = spanning_codewords();
    std::array<ComponentCode, 4> out;
    for (int comp = 1; comp <= 4; ++comp) {
        std::vector<std::vector<Gf16>> rows;
        rows.reserve(spanning.size());
        for (const auto& word : spanning) {
            std::vector<Gf16> row(word.size());
            for (std::size_t i = 0; i < word.size(); ++i) row[i] = gray(word[i]).component(comp);
            rows.push_back(std::move(row));
        }
        out[static_cast<std::size_t>(comp - 1)] =
            ComponentCode{comp, n_, row_reduce(std::move(rows))};
    }
    return out;
}

std::vector<R16Elem> skew_shift(std::span<const R16Elem> word) {
    std::vector<R16Elem> out(word.size());
    if (word.empty()) return out;
    out[0] = theta(word.back());
    for (std::size_t i = 1; i < word.size(); ++i) out[i] = theta(word[i - 1]);
    return out;
}

std::string word_to_hex(std::span<const R16Elem> word) {
    std::string s;
    s.reserve(word.size() * 5);
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) s.push_back(',');
        s += word[i].to_hex();
    }
    return s;
}

std::vector<R16Elem> word_from_hex(std::string_view text) {
    std::vector<R16Elem> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view w =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        out.push_back(R16Elem::from_hex(w));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace skewdna
