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

#include "skewdna/skewpoly.hpp"

#include "skewdna/errors.hpp"

namespace skewdna {

SkewPoly::SkewPoly(std::vector<R16Elem> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void SkewPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

SkewPoly SkewPoly::constant(R16Elem c) { return SkewPoly(std::vector<R16Elem>{c}); }

SkewPoly SkewPoly::monomial(R16Elem c, int degree) {
    if (degree < 0) throw ValidationError("monomial degree must be nonnegative");
    std::vector<R16Elem> coeffs(static_cast<std::size_t>(degree) + 1);
    coeffs.back() = c;
    return SkewPoly(std::move(coeffs));
}

SkewPoly SkewPoly::xn_minus_1(int n) {
    if (n <= 0) throw ValidationError("x^n - 1 needs n >= 1");
    std::vector<R16Elem> coeffs(static_cast<std::size_t>(n) + 1);
    coeffs.front() = R16Elem::one();
    coeffs.back() = R16Elem::one();
    return SkewPoly(std::move(coeffs));
}

SkewPoly SkewPoly::parse(std::string_view text) {
    std::vector<R16Elem> coeffs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view word =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        coeffs.push_back(R16Elem::from_hex(word));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return SkewPoly(std::move(coeffs));
}

std::string SkewPoly::to_string() const {
    if (coeffs_.empty()) return "0000";
    std::string out;
    out.reserve(coeffs_.size() * 5);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out.push_back(',');
        out += coeffs_[i].to_hex();
    }
    return out;
}

R16Elem SkewPoly::coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return R16Elem::zero();
    return coeffs_[static_cast<std::size_t>(i)];
}

SkewPoly operator+(const SkewPoly& f, const SkewPoly& g) {
    std::vector<R16Elem> out(std::max(f.coeffs_.size(), g.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        R16Elem s;
        if (i < f.coeffs_.size()) s += f.coeffs_[i];
        if (i < g.coeffs_.size()) s += g.coeffs_[i];
        out[i] = s;
    }
    return SkewPoly(std::move(out));
}

SkewPoly operator*(const SkewPoly& f, const SkewPoly& g) {
    if (f.is_zero() || g.is_zero()) return SkewPoly();
    std::vector<R16Elem> out(f.coeffs_.size() + g.coeffs_.size() - 1);
    // theta^i depends only on the parity of i; keep both images of g.
    std::vector<R16Elem> g_theta(g.coeffs_.size());
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) g_theta[j] = theta(g.coeffs_[j]);
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        const R16Elem fi = f.coeffs_[i];
        if (fi.is_zero()) continue;
        const std::vector<R16Elem>& gi = (i & 1u) ? g_theta : g.coeffs_;
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j) out[i + j] += fi * gi[j];
    }
    return SkewPoly(std::move(out));
}

DivModResult right_divmod(const SkewPoly& f, const SkewPoly& g) {
    if (g.is_zero()) throw ValidationError("division by the zero polynomial");
    if (!g.is_monic()) throw ValidationError("right division requires a monic divisor");
    const int dg = g.degree();
    if (f.degree() < dg) return {SkewPoly(), f};

    std::vector<R16Elem> rem(f.coeffs());
    std::vector<R16Elem> quot(static_cast<std::size_t>(f.degree() - dg) + 1);
    const SkewPoly g_theta = apply_theta(g);
    for (int t = f.degree() - dg; t >= 0; --t) {
        const R16Elem c = rem[static_cast<std::size_t>(t + dg)];
        quot[static_cast<std::size_t>(t)] = c;
        if (c.is_zero()) continue;
        // subtract (c x^t) * g; the leading term cancels since g is monic
        const SkewPoly& gi = (t & 1) ? g_theta : g;
        for (int j = 0; j < dg; ++j) rem[static_cast<std::size_t>(t + j)] += c * gi.coeff(j);
        rem[static_cast<std::size_t>(t + dg)] = R16Elem::zero();
    }
    rem.resize(static_cast<std::size_t>(dg));
    return {SkewPoly(std::move(quot)), SkewPoly(std::move(rem))};
}

bool right_divides_xn_minus_1(const SkewPoly& g, int n) {
    return right_divmod(SkewPoly::xn_minus_1(n), g).remainder.is_zero();
}

bool is_palindromic(const SkewPoly& f) {
    const int t = f.degree();
    for (int i = 0; i <= t; ++i)
        if (f.coeff(i) != f.coeff(t - i)) return false;
    return true;
}

bool is_theta_palindromic(const SkewPoly& f) {
    const int t = f.degree();
    for (int i = 0; i <= t; ++i)
        if (f.coeff(i) != theta(f.coeff(t - i))) return false;
    return true;
}

SkewPoly apply_theta(const SkewPoly& f) {
    std::vector<R16Elem> out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = theta(f.coeffs()[i]);
    return SkewPoly(std::move(out));
}

}  // namespace skewdna
