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

#include "bivar/spectra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bivar {

namespace {

const Index ORIGIN{0, 0};

// Generators in splitting order: L10, L01, then the rest in deg-lex order.
std::vector<Index> splitting_order(const Domain& d) {
    std::vector<Index> out;
    for (const Index& g : {Index{1, 0}, Index{0, 1}})
        if (d.contains(g)) out.push_back(g);
    for (const auto& e : d)
        if (e != ORIGIN && std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    return out;
}

// Restriction M of G to the invariant column space of W, i.e. W M = G W.
Matrix restrict_to(const Matrix& G, const Matrix& W) {
    const Matrix Wt = W.transpose();
    const Matrix GW = G * W;
    const Matrix M = inverse(Wt * W) * (Wt * GW);
    if (W * M != GW) throw VerificationFailure("eigenspace is not invariant: the L-matrices do not commute");
    return M;
}

}  // namespace

Spectrum first_eigenmatrix(const IntersectionTensor& t, const DualLabeler& labeler) {
    if (!t.full()) throw std::invalid_argument("first_eigenmatrix needs a full tensor");
    const Domain& d = t.domain();
    const std::size_t n = d.size();

    std::vector<Matrix> spaces{Matrix::identity(n)};
    for (const auto& g : splitting_order(d)) {
        const Matrix G = t.lmatrix(g).transpose();
        const auto roots = rational_eigenvalues(G);
        std::vector<Matrix> next;
        for (const auto& W : spaces) {
            if (W.cols() == 1) {
                next.push_back(W);
                continue;
            }
            const Matrix M = restrict_to(G, W);
            std::size_t found = 0;
            for (const auto& [theta, mult] : roots) {
                Matrix shifted = M;
                for (std::size_t k = 0; k < M.rows(); ++k) shifted(k, k) -= theta;
                const Matrix K = kernel(shifted);
                if (K.cols() == 0) continue;
                next.push_back(W * K);
                found += K.cols();
            }
            if (found != W.cols())
                throw NonRationalSpectrum("L" + to_string(g) + " has irrational eigenvalues or is not diagonalizable over Q");
        }
        spaces = std::move(next);
    }

    std::vector<std::vector<Rational>> rows;
    for (const auto& W : spaces) {
        if (W.cols() != 1) throw NonSeparated("a common eigenspace of dimension " + std::to_string(W.cols()) + " remains");
        std::vector<Rational> u = W.col(0);
        if (sgn(u[0]) == 0) throw VerificationFailure("common eigenvector vanishes at (0,0)");
        const Rational u0 = u[0];
        for (auto& x : u) x /= u0;
        for (const auto& g : d) {
            const auto Gu = t.lmatrix(g).transpose() * std::span<const Rational>(u);
            for (std::size_t b = 0; b < n; ++b)
                if (Gu[b] != u[d.position(g)] * u[b]) throw VerificationFailure("row is not a common eigenvector");
        }
        rows.push_back(std::move(u));
    }
    if (d.contains({1, 0}) && d.contains({0, 1})) {
        std::set<std::pair<Rational, Rational>> pairs;
        const std::size_t px = d.position({1, 0}), py = d.position({0, 1});
        for (const auto& u : rows)
            if (!pairs.emplace(u[px], u[py]).second)
                throw NonSeparated("eigenvalue pair (" + u[px].get_str() + "," + u[py].get_str() + ") repeats");
    }

    std::vector<Rational> k(n);
    for (std::size_t b = 0; b < n; ++b) k[b] = t.valence(d[b]);
    const auto trivial = std::find(rows.begin(), rows.end(), k);
    if (trivial == rows.end()) throw VerificationFailure("no eigenvalue row equals the valences");
    std::iter_swap(rows.begin(), trivial);
    std::sort(rows.begin() + 1, rows.end(), [](const auto& a, const auto& b) { return a > b; });

    std::vector<Index> labels(rows.size());
    if (labeler) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto lab = labeler(d, rows[r]);
            if (!lab) throw std::invalid_argument("dual labeler rejected an eigenvalue row");
            labels[r] = *lab;
        }
        if (labels[0] != ORIGIN) throw std::invalid_argument("dual labeler must give the trivial eigenspace (0,0)");
    } else {
        labels = d.points();
    }
    const Domain dual(labels);
    if (dual.size() != n) throw std::invalid_argument("dual labels are not distinct");

    Spectrum sp;
    sp.domain = d;
    sp.dual_domain = dual;
    sp.P = Matrix(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) sp.P(dual.position(labels[r]), c) = rows[r][c];
    sp.valences = k;
    sp.vertex_count = std::accumulate(k.begin(), k.end(), Rational(0));
    sp.multiplicities.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
        Rational s = 0;
        for (std::size_t b = 0; b < n; ++b) s += sp.P(r, b) * sp.P(r, b) / k[b];
        sp.multiplicities[r] = sp.vertex_count / s;
    }
    sp.Q = sp.vertex_count * inverse(sp.P);
    for (std::size_t r = 0; r < n; ++r)
        if (sp.Q(0, r) != sp.multiplicities[r]) throw VerificationFailure("q_mn(00) differs from the multiplicity");
    return sp;
}

Spectrum relabel_dual(const Spectrum& sp, const std::map<Index, Index>& relabel) {
    const Domain& od = sp.dual_domain;
    std::vector<Index> labels;
    for (const auto& e : od) {
        const auto it = relabel.find(e);
        labels.push_back(it == relabel.end() ? e : it->second);
    }
    if (labels[0] != ORIGIN) throw std::invalid_argument("relabeling must fix (0,0)");
    Spectrum out = sp;
    out.dual_domain = Domain(labels);
    if (out.dual_domain.size() != od.size()) throw std::invalid_argument("dual relabeling is not injective");
    const std::size_t n = od.size();
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t nr = out.dual_domain.position(labels[r]);
        for (std::size_t c = 0; c < n; ++c) {
            out.P(nr, c) = sp.P(r, c);
            out.Q(c, nr) = sp.Q(c, r);
        }
        out.multiplicities[nr] = sp.multiplicities[r];
    }
    return out;
}

std::map<Index, Matrix> idempotents(const VertexScheme& s, const Spectrum& sp) {
    if (s.domain() != sp.domain) throw std::invalid_argument("spectrum belongs to a different domain");
    const std::size_t v = s.vertex_count();
    if (sp.vertex_count != static_cast<unsigned long>(v)) throw std::invalid_argument("spectrum has a different vertex count");
    const auto table = s.class_table();
    const Rational inv_v = Rational(1) / Rational(static_cast<unsigned long>(v));
    std::map<Index, Matrix> E;
    for (const auto& mn : sp.dual_domain) {
        std::vector<Rational> per_class(sp.domain.size());
        for (std::size_t c = 0; c < per_class.size(); ++c) per_class[c] = sp.q(mn, sp.domain[c]) * inv_v;
        Matrix M(v, v);
        for (std::size_t x = 0; x < v; ++x)
            for (std::size_t y = 0; y < v; ++y) M(x, y) = per_class[table[x * v + y]];
        E.emplace(mn, std::move(M));
    }
    Matrix sum(v, v);
    for (auto a = E.begin(); a != E.end(); ++a) {
        sum += a->second;
        for (auto b = a; b != E.end(); ++b) {
            const Matrix prod = a->second * b->second;
            if (a == b ? prod != a->second : !prod.is_zero())
                throw VerificationFailure("E" + to_string(a->first) + " E" + to_string(b->first) + " is not as required");
        }
    }
    if (sum != Matrix::identity(v)) throw VerificationFailure("idempotents do not sum to the identity");
    if (E.at(ORIGIN) != inv_v * Matrix::ones(v, v)) throw VerificationFailure("E00 differs from J/v");
    return E;
}

IntersectionTensor krein_parameters(const VertexScheme& s, const Spectrum& sp, const std::map<Index, Matrix>& idems) {
    const Domain& ds = sp.dual_domain;
    const std::size_t n = ds.size();
    const Rational v = Rational(static_cast<unsigned long>(s.vertex_count()));
    auto inner = [](const Matrix& a, const Matrix& b) {
        Rational acc = 0;
        for (std::size_t k = 0; k < a.data().size(); ++k)
            if (sgn(a.data()[k]) != 0) acc += a.data()[k] * b.data()[k];
        return acc;
    };
    std::map<Index, Matrix> lm;
    for (const auto& a : ds) {
        if (a == ORIGIN) continue;
        Matrix L(n, n);
        for (const auto& b : ds) {
            const Matrix H = hadamard(idems.at(a), idems.at(b));
            Matrix residual = H;
            for (const auto& c : ds) {
                const Rational q = v * inner(H, idems.at(c)) / sp.multiplicity(c);
                L(ds.position(c), ds.position(b)) = q;
                if (sgn(q) != 0) residual -= (q / v) * idems.at(c);
            }
            if (!residual.is_zero())
                throw VerificationFailure("E" + to_string(a) + " o E" + to_string(b) + " is not in the span of the idempotents");
        }
        lm.emplace(a, std::move(L));
    }
    return IntersectionTensor(ds, std::move(lm), true);
}

MetricVerdict cometric_test(const IntersectionTensor& krein, const TypeParams& tp) { return metric_test(krein, tp); }

PolyFamily construct_vstar(const IntersectionTensor& krein, const TypeParams& tp) { return construct_vij(krein, tp); }

std::optional<Index> vstar_failure(const PolyFamily& vstar, const std::map<Index, Matrix>& idems, const Rational& v) {
    const Matrix X = v * idems.at({1, 0}), Y = v * idems.at({0, 1});
    for (const auto& [mn, poly] : vstar)
        if (poly_eval_hadamard(poly, X, Y) != v * idems.at(mn)) return mn;
    return std::nullopt;
}

CheckResult wilson_check(const Spectrum& sp) {
    for (const auto& ij : sp.domain)
        for (const auto& mn : sp.dual_domain)
            if (sp.q(mn, ij) * sp.valence(ij) != sp.p(ij, mn) * sp.multiplicity(mn)) return {false, {ij, mn}};
    return {};
}

CheckResult orthogonality_check(const Spectrum& sp) {
    const Rational& v = sp.vertex_count;
    for (const auto& ij : sp.domain)
        for (const auto& mn : sp.domain) {
            Rational s = 0;
            for (const auto& rs : sp.dual_domain)
                s += sp.multiplicity(rs) * (sp.p(ij, rs) / sp.valence(ij)) * (sp.p(mn, rs) / sp.valence(mn));
            if (s != (ij == mn ? v / sp.valence(ij) : Rational(0))) return {false, {ij, mn}};
        }
    for (const auto& ij : sp.dual_domain)
        for (const auto& mn : sp.dual_domain) {
            Rational s = 0;
            for (const auto& rs : sp.domain)
                s += sp.valence(rs) * (sp.q(ij, rs) / sp.multiplicity(ij)) * (sp.q(mn, rs) / sp.multiplicity(mn));
            if (s != (ij == mn ? v / sp.multiplicity(ij) : Rational(0))) return {false, {ij, mn}};
        }
    return {};
}

DualAdjacency dual_adjacency(const VertexScheme& s, const std::map<Index, Matrix>& idems, const IntersectionTensor& krein,
                             std::size_t base) {
    const std::size_t v = s.vertex_count();
    if (base >= v) throw std::out_of_range("base vertex out of range");
    const Rational rv = Rational(static_cast<unsigned long>(v));
    DualAdjacency out{base, {}};
    for (const auto& [mn, E] : idems) {
        std::vector<Rational> diag(v);
        for (std::size_t p = 0; p < v; ++p) diag[p] = rv * E(base, p);
        out.matrices.emplace(mn, Matrix::diagonal(diag));
    }
    const Domain& ds = krein.domain();
    for (const auto& a : ds)
        for (const auto& b : ds) {
            Matrix rhs(v, v);
            for (const auto& c : ds) {
                const Rational q = krein.p(a, b, c);
                if (sgn(q) != 0) rhs += q * out.matrices.at(c);
            }
            if (out.matrices.at(a) * out.matrices.at(b) != rhs)
                throw VerificationFailure("dual Bose-Mesner relation fails for A*" + to_string(a) + " A*" + to_string(b));
        }
    return out;
}

std::optional<Index> dual_polynomial_failure(const DualAdjacency& da, const PolyFamily& vstar) {
    const Matrix& X = da.matrices.at({1, 0});
    const Matrix& Y = da.matrices.at({0, 1});
    for (const auto& [mn, poly] : vstar)
        if (poly_eval(poly, X, Y) != da.matrices.at(mn)) return mn;
    return std::nullopt;
}

std::optional<Index> reconstruction_failure(const VertexScheme& s, const Spectrum& sp, const std::map<Index, Matrix>& idems) {
    const std::size_t v = s.vertex_count();
    for (const auto& ij : sp.domain) {
        Matrix sum(v, v);
        for (const auto& mn : sp.dual_domain) sum += sp.p(ij, mn) * idems.at(mn);
        if (sum != s.adjacency(ij)) return ij;
    }
    return std::nullopt;
}

}  // namespace bivar
