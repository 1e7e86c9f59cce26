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

#include "bivar/bivariate_p.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bivar {

namespace {

const Index X10{1, 0};
const Index Y01{0, 1};
const Index ORIGIN{0, 0};

void require_generators(const IntersectionTensor& t) {
    const Domain& d = t.domain();
    if (!d.contains(X10) || !d.contains(Y01)) throw std::invalid_argument("domain must contain (1,0) and (0,1)");
    if (!t.has_row(X10) || !t.has_row(Y01)) throw std::out_of_range("tensor needs the rows (1,0) and (0,1)");
}

void reject_negative(const IntersectionTensor& t) {
    if (!t.vertex_sourced()) return;
    for (const auto& [key, value] : t.entries())
        if (sgn(value) < 0) throw std::invalid_argument("malformed tensor: negative intersection number from a vertex scheme");
}

// Visits every applicable metric condition. For each (i,j) whose successor s along
// `left` is in the domain: nonvanishing(left, at, term) for the two coefficients, and
// support(left, at, c) for every c in the support of A_left A_ij.
template <class NonVanishing, class Support>
void visit_conditions(const IntersectionTensor& t, NonVanishing nonvanishing, Support support) {
    const Domain& d = t.domain();
    for (const auto& ij : d)
        for (const Index& left : {X10, Y01}) {
            const Index succ = ij + left;
            if (!d.contains(succ)) continue;
            nonvanishing(left, ij, succ);
            nonvanishing(left, succ, ij);
            for (const auto& c : d)
                if (sgn(t.p(left, ij, c)) != 0) support(left, ij, c);
        }
}

struct Interval {
    Rational lo, hi;
    bool hi_open;
    bool empty_by_constant = false;

    // coef * x <= rhs
    void constrain(const Rational& coef, const Rational& rhs) {
        if (sgn(coef) == 0) {
            if (sgn(rhs) < 0) empty_by_constant = true;
            return;
        }
        const Rational bound = rhs / coef;
        if (sgn(coef) > 0) {
            if (bound < hi) {
                hi = bound;
                hi_open = false;
            }
        } else if (bound > lo) {
            lo = bound;
        }
    }
    bool feasible() const { return !empty_by_constant && (hi_open ? lo < hi : lo <= hi); }
};

// a precedes-or-equals b, split into its alpha part and beta part.
void constrain_leq(Interval& alpha, Interval& beta, const Index& a, const Index& b) {
    alpha.constrain(Rational(a.j - b.j), Rational(b.i - a.i));
    beta.constrain(Rational(a.i - b.i), Rational(b.j - a.j));
}

}  // namespace

std::string to_string(Condition c) {
    switch (c) {
        case Condition::cm1: return "cm1";
        case Condition::cm2: return "cm2";
        case Condition::cm3: return "cm3";
        case Condition::cm4: return "cm4";
        case Condition::domain: return "domain";
    }
    return "?";
}

MetricVerdict metric_test(const IntersectionTensor& t, const TypeParams& tp) {
    require_generators(t);
    reject_negative(t);
    MetricVerdict out;
    for (const auto& [top, missing] : domain_is_compatible(t.domain(), tp).violations)
        out.violations.push_back({Condition::domain, top, missing});
    visit_conditions(
        t,
        [&](const Index& left, const Index& at, const Index& term) {
            if (sgn(t.p(left, at, term)) == 0) out.violations.push_back({left == X10 ? Condition::cm1 : Condition::cm2, at, term});
        },
        [&](const Index& left, const Index& ij, const Index& c) {
            if (!ab_leq(tp, c, ij + left) || !ab_leq(tp, ij, c + left))
                out.violations.push_back({left == X10 ? Condition::cm3 : Condition::cm4, ij, c});
        });
    out.passed = out.violations.empty();
    return out;
}

MinimalType minimal_type(const IntersectionTensor& t) {
    require_generators(t);
    reject_negative(t);
    Interval alpha{0, 1, false}, beta{0, 1, true};
    MinimalType out;
    visit_conditions(
        t,
        [&](const Index& left, const Index& at, const Index& term) {
            if (sgn(t.p(left, at, term)) == 0) out.nonvanishing.push_back({left == X10 ? Condition::cm1 : Condition::cm2, at, term});
        },
        [&](const Index& left, const Index& ij, const Index& c) {
            constrain_leq(alpha, beta, c, ij + left);
            constrain_leq(alpha, beta, ij, c + left);
        });
    out.region = {alpha.lo, alpha.hi, beta.lo, beta.hi, beta.hi_open, alpha.feasible() && beta.feasible()};
    if (out.region.feasible) {
        out.canonical = TypeParams(alpha.lo, beta.lo);
        out.domain = domain_is_compatible(t.domain(), *out.canonical);
    } else {
        out.domain.compatible = false;
    }
    return out;
}

std::set<Index, DegLexLess> recurrence_support(const IntersectionTensor& t, const Index& left, const Index& at) {
    std::set<Index, DegLexLess> out;
    for (const auto& c : t.domain())
        if (sgn(t.p(left, at, c)) != 0) out.insert(c);
    return out;
}

PolyFamily construct_vij(const IntersectionTensor& t, const TypeParams& tp) {
    require_generators(t);
    PolyFamily v;
    v[ORIGIN] = BivarPoly(1);
    for (const auto& ij : t.domain()) {
        if (ij == ORIGIN) continue;
        const bool use_x = ij.i >= 1;
        const Index left = use_x ? X10 : Y01;
        const Index prev = use_x ? Index{ij.i - 1, ij.j} : Index{0, ij.j - 1};
        const auto pv = v.find(prev);
        if (pv == v.end()) throw std::domain_error("v" + to_string(ij) + ": predecessor " + to_string(prev) + " not in the domain");
        const Rational lead = t.p(left, prev, ij);
        if (sgn(lead) == 0)
            throw std::domain_error("v" + to_string(ij) + ": coefficient p_{" + to_string(left) + ";" + to_string(prev) + "}^{" +
                                    to_string(ij) + "} vanishes");
        BivarPoly rhs = (use_x ? BivarPoly::x() : BivarPoly::y()) * pv->second;
        for (const auto& c : t.domain()) {
            if (c == ij) continue;
            const Rational coef = t.p(left, prev, c);
            if (sgn(coef) == 0) continue;
            const auto vc = v.find(c);
            if (vc == v.end())
                throw std::domain_error("v" + to_string(ij) + ": recurrence involves " + to_string(c) + " which comes later");
            rhs -= coef * vc->second;
        }
        BivarPoly p = rhs / lead;
        const auto deg = poly_is_compatible(p, tp);
        if (!deg || *deg != ij) throw VerificationFailure("v" + to_string(ij) + " is not compatible of degree " + to_string(ij));
        v.emplace(ij, std::move(p));
    }
    return v;
}

IntersectionTensor complete_tensor(const IntersectionTensor& t, const PolyFamily& v) {
    const Matrix L10 = t.lmatrix(X10), L01 = t.lmatrix(Y01);
    if (L10 * L01 != L01 * L10) throw VerificationFailure("L10 and L01 do not commute");
    const Domain& d = t.domain();
    std::map<Index, Matrix> lm;
    for (const auto& ij : d) {
        if (ij == ORIGIN) continue;
        Matrix L = poly_eval(v.at(ij), L10, L01);
        for (std::size_t c = 0; c < d.size(); ++c)
            if (L(c, 0) != (d[c] == ij ? 1 : 0))
                throw VerificationFailure("v" + to_string(ij) + "(L10,L01) does not map A00 to A" + to_string(ij));
        if (t.has_row(ij) && t.lmatrix(ij) != L) throw VerificationFailure("stored row " + to_string(ij) + " disagrees with v" + to_string(ij));
        lm.emplace(ij, std::move(L));
    }
    return IntersectionTensor(d, std::move(lm), t.vertex_sourced());
}

std::vector<Labeling> all_labelings(const IntersectionTensor& t, const std::optional<TypeParams>& tp, const Config& cfg) {
    if (!t.full()) throw std::invalid_argument("labeling search needs a full tensor");
    const Domain& od = t.domain();
    const std::size_t classes = od.size() - 1;
    if (classes > cfg.max_search_classes)
        throw ResourceGuardExceeded("labeling search over " + std::to_string(classes) + " classes exceeds the guard of " +
                                    std::to_string(cfg.max_search_classes));
    std::vector<Labeling> found;
    if (classes < 2) return found;
    const int N = static_cast<int>(classes);
    std::vector<Index> grid;
    for (int s = 1; s <= N; ++s)
        for (int j = 0; j <= s; ++j) grid.push_back({s - j, j});  // deg-lex order

    std::map<Index, Index> assigned;  // new -> old
    std::set<Index> used{ORIGIN};
    assigned[ORIGIN] = ORIGIN;

    auto accept = [&]() {
        Labeling lab;
        std::vector<Index> pts;
        for (const auto& [nw, old] : assigned) {
            lab.relabel[old] = nw;
            pts.push_back(nw);
        }
        lab.domain = Domain(pts);
        const IntersectionTensor r = relabel(t, lab.relabel);
        const bool ok = tp ? metric_test(r, *tp).passed : minimal_type(r).bivariate_p();
        if (ok) found.push_back(std::move(lab));
    };

    std::function<void(std::size_t)> dfs = [&](std::size_t from) {
        if (assigned.size() == od.size()) {
            accept();
            return;
        }
        for (std::size_t g = from; g < grid.size(); ++g) {
            const Index p = grid[g];
            if (assigned.size() == 1 && p != X10) continue;
            if (assigned.size() == 2 && p != Y01) continue;
            if (p.i >= 1 && !assigned.count({p.i - 1, p.j})) continue;
            if (p.j >= 1 && !assigned.count({p.i, p.j - 1})) continue;
            for (const auto& c : od) {
                if (used.count(c)) continue;
                if (p != X10 && p != Y01) {
                    const Index gen = p.i >= 1 ? assigned.at(X10) : assigned.at(Y01);
                    const Index prev = p.i >= 1 ? assigned.at({p.i - 1, p.j}) : assigned.at({0, p.j - 1});
                    if (sgn(t.p(gen, prev, c)) == 0) continue;
                }
                assigned[p] = c;
                used.insert(c);
                dfs(g + 1);
                assigned.erase(p);
                used.erase(c);
            }
        }
    };
    dfs(0);
    return found;
}

std::optional<Labeling> labeling_search(const IntersectionTensor& t, const TypeParams& tp, const Config& cfg) {
    auto all = all_labelings(t, tp, cfg);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::optional<TypedLabeling> minimal_type_search(const IntersectionTensor& t, const Config& cfg) {
    std::optional<TypedLabeling> best;
    for (auto& lab : all_labelings(t, std::nullopt, cfg)) {
        const TypeParams tp = *minimal_type(relabel(t, lab.relabel)).canonical;
        if (!best || tp.alpha() < best->type.alpha() || (tp.alpha() == best->type.alpha() && tp.beta() < best->type.beta()))
            best = TypedLabeling{std::move(lab), tp};
    }
    return best;
}

}  // namespace bivar
