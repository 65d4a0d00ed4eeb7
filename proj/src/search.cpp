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

#include "skewdna/search.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "skewdna/detail/rng.hpp"
#include "skewdna/detail/threads.hpp"
#include "skewdna/errors.hpp"

namespace skewdna {

const char* to_string(PolyClass cls) {
    return cls == PolyClass::palindromic ? "palindromic" : "theta-palindromic";
}

PolyClass poly_class_from_string(std::string_view name) {
    if (name == "palindromic") return PolyClass::palindromic;
    if (name == "theta-palindromic" || name == "theta_palindromic")
        return PolyClass::theta_palindromic;
    throw ValidationError("unknown polynomial class (expected palindromic or theta-palindromic)");
}

namespace detail {

namespace {

constexpr int kMaxSearchLength = 64;

std::vector<std::uint16_t> theta_fixed_points() {
    std::vector<std::uint16_t> fixed;
    for (unsigned p = 0; p < 65536; ++p) {
        const std::uint16_t v = static_cast<std::uint16_t>(p);
        if (theta(R16Elem::from_packed(v)) == R16Elem::from_packed(v)) fixed.push_back(v);
    }
    return fixed;
}

// Normal-domain packed coefficients of one candidate, lowest degree first.
void decode_raw(const CandidateSpace& space, std::uint64_t packed, std::uint16_t* coeffs) {
    const int t = space.degree;
    for (int i = 0; i <= t; ++i) coeffs[i] = 0;
    coeffs[t] = 0x1000;  // monic
    for (std::size_t i = 0; i < space.positions.size(); ++i) {
        const std::uint64_t value =
            (packed >> space.offsets[i]) & ((1ull << space.digit_bits[i]) - 1);
        coeffs[space.positions[i]] = space.digit_bits[i] == 8
                                         ? space.fixed_alphabet[static_cast<std::size_t>(value)]
                                         : static_cast<std::uint16_t>(value);
    }
    for (int i = 0; 2 * i < t; ++i) {
        const std::uint16_t upper = coeffs[t - i];
        coeffs[i] = space.cls == PolyClass::palindromic
                        ? upper
                        : gray_inv_packed(gtheta_packed(gray_packed(upper)));
    }
}

// Right-divisibility of x^n - 1 in the Gray domain, where addition is XOR,
// multiplication is componentwise, and theta reverses-and-Frobeniuses the
// nibbles. The coefficients arrive in the normal domain.
bool divides_xn_minus_1_gray(const std::uint16_t* coeffs, int t, int n) {
    std::array<std::uint16_t, kMaxSearchLength + 1> work{};
    work[0] = 0x1111;  // gray(1)
    work[static_cast<std::size_t>(n)] = 0x1111;

    std::array<std::uint16_t, kMaxSearchLength> g_even{};
    std::array<std::uint16_t, kMaxSearchLength> g_odd{};
    for (int j = 0; j < t; ++j) {
        g_even[static_cast<std::size_t>(j)] = gray_packed(coeffs[j]);
        g_odd[static_cast<std::size_t>(j)] = gtheta_packed(g_even[static_cast<std::size_t>(j)]);
    }

    for (int step = n - t; step >= 0; --step) {
        const std::uint16_t q = work[static_cast<std::size_t>(step + t)];
        if (q == 0) continue;
        const std::uint16_t* img = (step & 1) ? g_odd.data() : g_even.data();
        for (int j = 0; j < t; ++j)
            work[static_cast<std::size_t>(step + j)] ^= gmul_packed(q, img[j]);
        work[static_cast<std::size_t>(step + t)] = 0;
    }
    for (int j = 0; j < t; ++j)
        if (work[static_cast<std::size_t>(j)] != 0) return false;
    return true;
}

void sort_by_text(std::vector<SkewPoly>& polys) {
    std::sort(polys.begin(), polys.end(), [](const SkewPoly& a, const SkewPoly& b) {
        return a.to_string() < b.to_string();
    });
    polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
}

void validate_search_args(int n, int degree) {
    if (n <= 0 || n % 2 != 0) throw ValidationError("search requires a positive even length");
    if (n > kMaxSearchLength) throw ValidationError("search length is capped at 64");
    if (degree < 1 || degree >= n)
        throw ValidationError("search degree must satisfy 1 <= degree < n");
}

}  // namespace

CandidateSpace make_candidate_space(int degree, PolyClass cls) {
    CandidateSpace space;
    space.degree = degree;
    space.cls = cls;
    const int t = degree;
    const int first = (t % 2 == 0) ? t / 2 : (t + 1) / 2;
    unsigned offset = 0;
    for (int i = first; i < t; ++i) {
        const bool fixed_middle = (2 * i == t) && cls == PolyClass::theta_palindromic;
        space.positions.push_back(i);
        space.digit_bits.push_back(fixed_middle ? 8u : 16u);
        space.offsets.push_back(offset);
        offset += space.digit_bits.back();
        if (fixed_middle && space.fixed_alphabet.empty())
            space.fixed_alphabet = theta_fixed_points();
    }
    space.total_bits = offset;
    if (space.total_bits > 63)
        throw BudgetError("free-coefficient space beyond 2^63 candidates is not supported");
    return space;
}

SkewPoly CandidateSpace::decode(std::uint64_t packed_digits) const {
    std::vector<std::uint16_t> raw(static_cast<std::size_t>(degree) + 1);
    decode_raw(*this, packed_digits, raw.data());
    std::vector<R16Elem> coeffs(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) coeffs[i] = R16Elem::from_packed(raw[i]);
    return SkewPoly(std::move(coeffs));
}

std::vector<std::uint64_t> sample_candidates(const CandidateSpace& space, std::uint64_t budget,
                                             std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::uint64_t> keys;
    keys.reserve(budget);
    for (std::uint64_t i = 0; i < budget; ++i) keys.push_back(rng.next_bits(space.total_bits));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    // Top up the rare collision losses so exactly `budget` distinct
    // candidates get tested (the space is larger than the budget here).
    std::vector<std::uint64_t> extra;
    while (keys.size() + extra.size() < budget) {
        const std::uint64_t key = rng.next_bits(space.total_bits);
        if (std::binary_search(keys.begin(), keys.end(), key)) continue;
        if (std::find(extra.begin(), extra.end(), key) != extra.end()) continue;
        extra.push_back(key);
    }
    keys.insert(keys.end(), extra.begin(), extra.end());
    return keys;
}

SearchResult search_divisors_serial(int n, int degree, PolyClass cls, const SearchOptions& opts) {
    validate_search_args(n, degree);
    const CandidateSpace space = make_candidate_space(degree, cls);
    const std::uint64_t size = 1ull << space.total_bits;
    const SkewPoly target = SkewPoly::xn_minus_1(n);

    SearchResult result;
    result.exhaustive = opts.force_exhaustive || size <= opts.budget;
    std::vector<std::uint64_t> keys;
    if (result.exhaustive) {
        keys.resize(size);
        for (std::uint64_t i = 0; i < size; ++i) keys[i] = i;
    } else {
        keys = sample_candidates(space, opts.budget, opts.seed);
    }
    result.candidates_tested = keys.size();
    for (const std::uint64_t key : keys) {
        const SkewPoly g = space.decode(key);
        if (right_divmod(target, g).remainder.is_zero()) result.divisors.push_back(g);
    }
    sort_by_text(result.divisors);
    return result;
}

}  // namespace detail

SearchResult search_divisors(int n, int degree, PolyClass cls, const SearchOptions& opts) {
    detail::validate_search_args(n, degree);
    if (!opts.parallel) return detail::search_divisors_serial(n, degree, cls, opts);

    const detail::CandidateSpace space = detail::make_candidate_space(degree, cls);
    const std::uint64_t size = 1ull << space.total_bits;

    SearchResult result;
    result.exhaustive = opts.force_exhaustive || size <= opts.budget;

    std::vector<std::uint64_t> sampled;
    if (!result.exhaustive) sampled = detail::sample_candidates(space, opts.budget, opts.seed);
    const std::uint64_t count = result.exhaustive ? size : sampled.size();
    result.candidates_tested = count;

    std::vector<std::uint64_t> hits;
#pragma omp parallel num_threads(detail::worker_threads())
    {
        std::array<std::uint16_t, detail::kMaxSearchLength + 1> raw{};
        std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 4096)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
            const std::uint64_t key =
                result.exhaustive ? static_cast<std::uint64_t>(i) : sampled[static_cast<std::size_t>(i)];
            detail::decode_raw(space, key, raw.data());
            if (detail::divides_xn_minus_1_gray(raw.data(), degree, n)) local.push_back(key);
        }
#pragma omp critical
        hits.insert(hits.end(), local.begin(), local.end());
    }

    result.divisors.reserve(hits.size());
    for (const std::uint64_t key : hits) result.divisors.push_back(space.decode(key));
    detail::sort_by_text(result.divisors);
    return result;
}

}  // namespace skewdna
