/*
   Copyright 2026 The bivar authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "bivar/orders.hpp"

#include <algorithm>
#include <stdexcept>

namespace bivar {

TypeParams::TypeParams(Rational alpha, Rational beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_ < 0 || alpha_ > 1) throw std::invalid_argument("alpha must lie in [0,1], got " + alpha_.get_str());
    if (beta_ < 0 || beta_ >= 1) throw std::invalid_argument("beta must lie in [0,1), got " + beta_.get_str());
}

std::ostream& operator<<(std::ostream& os, const TypeParams& t) { return os << '(' << t.alpha() << ',' << t.beta() << ')'; }

bool deglex_leq(const Index& a, const Index& b) { return !deglex_less(b, a); }

bool ab_leq(const TypeParams& t, const Index& a, const Index& b) {
    return a.i + t.alpha() * a.j <= b.i + t.alpha() * b.j && t.beta() * a.i + a.j <= t.beta() * b.i + b.j;
}

std::optional<Index> poly_is_compatible(const BivarPoly& p, const TypeParams& t) {
    if (p.is_zero()) throw std::invalid_argument("compatibility of the zero polynomial");
    const Index deg = p.degree();
    for (const auto& [e, c] : p.terms())
        if (!ab_leq(t, e, deg)) return std::nullopt;
    return deg;
}

Domain::Domain(std::vector<Index> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end(), DegLexLess{});
    if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) throw std::invalid_argument("duplicate domain point");
    for (const auto& e : points_)
        if (e.i < 0 || e.j < 0) throw std::invalid_argument("domain point outside N^2");
    if (points_.empty() || points_.front() != Index{0, 0}) throw std::invalid_argument("domain must contain (0,0)");
}

Domain Domain::triangle(int n) {
    std::vector<Index> pts;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) pts.push_back({i, j});
    return Domain(std::move(pts));
}

std::optional<std::size_t> Domain::find(const Index& e) const {
    const auto it = std::lower_bound(points_.begin(), points_.end(), e, DegLexLess{});
    if (it == points_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - points_.begin());
}

bool Domain::contains(const Index& e) const { return find(e).has_value(); }

std::size_t Domain::position(const Index& e) const {
    const auto k = find(e);
    if (!k) throw std::out_of_range("index " + to_string(e) + " not in domain");
    return *k;
}

std::ostream& operator<<(std::ostream& os, const Domain& d) {
    os << '{';
    for (std::size_t k = 0; k < d.size(); ++k) os << (k ? " " : "") << d[k];
    return os << '}';
}

DomainCheck domain_is_compatible(const Domain& d, const TypeParams& t) {
    DomainCheck out;
    for (auto it = d.points().rbegin(); it != d.points().rend(); ++it) {
        const Index top = *it;
        // Anything below top in the partial order is also below it in deg-lex.
        const int deg = top.i + top.j;
        for (int s = 0; s <= deg; ++s)
            for (int n = 0; n <= s; ++n) {
                const Index e{s - n, n};
                if (ab_leq(t, e, top) && !d.contains(e)) out.violations.emplace_back(top, e);
            }
    }
    out.compatible = out.violations.empty();
    if (!out.compatible) out.witness = out.violations.front();
    return out;
}

}  // namespace bivar
