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

#include "bivar/constructors.hpp"

#include "bivar/polyfam.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bivar {

namespace {

const Index ORIGIN{0, 0};
const Index X10{1, 0};
const Index Y01{0, 1};

std::size_t checked_power(std::size_t base, int exp, const Config& cfg, const std::string& what) {
    std::size_t v = 1;
    for (int t = 0; t < exp; ++t) {
        if (v > cfg.max_vertices / std::max<std::size_t>(base, 1) + 1) guard_vertices(cfg.max_vertices + 1, cfg, what);
        v *= base;
    }
    guard_vertices(v, cfg, what);
    return v;
}

// Tensor from L-matrices given in an explicit label order.
IntersectionTensor tensor_from_tables(const std::vector<Index>& order, const std::map<Index, Matrix>& tables) {
    Domain d(order);
    std::map<Index, Matrix> lm;
    for (const auto& [a, T] : tables) {
        Matrix L(d.size(), d.size());
        for (std::size_t r = 0; r < order.size(); ++r)
            for (std::size_t c = 0; c < order.size(); ++c) L(d.position(order[r]), d.position(order[c])) = T(r, c);
        lm.emplace(a, std::move(L));
    }
    return IntersectionTensor(std::move(d), std::move(lm));
}

}  // namespace

// ---------------------------------------------------------------- SRG

SrgParams::SrgParams(Rational k_, Rational b_, Rational c_) : k(std::move(k_)), b(std::move(b_)), c(std::move(c_)) {
    if (sgn(c) == 0) throw std::invalid_argument("SRG parameter c must be nonzero");
    const Rational vv = v();
    if (!is_integer(vv) || vv < 1) throw std::invalid_argument("SRG vertex count is not a positive integer");
    for (const Matrix& L : {L1(), L2()})
        for (const auto& x : L.data())
            if (sgn(x) < 0) throw std::invalid_argument("SRG parameters give a negative intersection number");
}

SrgParams SrgParams::from_eigenvalues(const Rational& k, const Rational& theta, const Rational& tau) {
    SrgParams p(k, -(theta + 1) * (tau + 1), k + theta * tau);
    p.theta = theta;
    p.tau = tau;
    return p;
}

Rational SrgParams::v() const { return (k * (b + c) + c) / c; }

Matrix SrgParams::L1() const { return {{0, k, 0}, {1, k - 1 - b, b}, {0, c, k - c}}; }

Matrix SrgParams::L2() const {
    const Rational l = b * k / c;
    return {{0, 0, l}, {0, b, l - b}, {1, k - c, l - 1 - k + c}};
}

IntersectionTensor srg_tensor(const SrgParams& p) {
    return IntersectionTensor(Domain({ORIGIN, X10, Y01}), {{X10, p.L1()}, {Y01, p.L2()}});
}

// ---------------------------------------------------------------- small vertex schemes

VertexScheme complete_scheme(std::size_t v) {
    std::vector<std::size_t> pts(v);
    std::iota(pts.begin(), pts.end(), 0);
    return scheme_from_relations(pts, [](std::size_t x, std::size_t y) { return x == y ? ORIGIN : X10; });
}

VertexScheme cycle4() {
    std::vector<int> pts{0, 1, 2, 3};
    return scheme_from_relations(pts, [](int x, int y) {
        const int d = (x - y + 4) % 4;
        return d == 0 ? ORIGIN : d == 2 ? Y01 : X10;
    });
}

VertexScheme hamming2(int q, const Config& cfg) {
    if (q < 2) throw std::invalid_argument("hamming2 needs q >= 2");
    const std::size_t v = checked_power(static_cast<std::size_t>(q), 2, cfg, "hamming2");
    std::vector<std::size_t> pts(v);
    std::iota(pts.begin(), pts.end(), 0);
    return scheme_from_relations(
        pts,
        [q](std::size_t x, std::size_t y) {
            const int dist = (x / q != y / q) + (x % q != y % q);
            return dist == 0 ? ORIGIN : dist == 1 ? X10 : Y01;
        },
        cfg);
}

VertexScheme petersen() {
    std::vector<std::pair<int, int>> pts;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) pts.emplace_back(a, b);
    return scheme_from_relations(pts, [](const std::pair<int, int>& x, const std::pair<int, int>& y) {
        if (x == y) return ORIGIN;
        const bool meet = x.first == y.first || x.first == y.second || x.second == y.first || x.second == y.second;
        return meet ? Y01 : X10;
    });
}

// ---------------------------------------------------------------- products and symmetrization

VertexScheme direct_product(const VertexScheme& s1, const VertexScheme& s2, std::vector<Index> order1, std::vector<Index> order2,
                            const Config& cfg) {
    if (order1.empty()) order1 = s1.domain().points();
    if (order2.empty()) order2 = s2.domain().points();
    if (order1.size() != s1.class_count() || order2.size() != s2.class_count())
        throw std::invalid_argument("class order must list every class of the factor");
    const std::size_t v1 = s1.vertex_count(), v2 = s2.vertex_count();
    guard_vertices(v1 * v2, cfg, "direct_product");
    auto distance_index = [](const VertexScheme& s, const std::vector<Index>& order) {
        const auto table = s.class_table();
        std::vector<int> pos(s.class_count());
        for (std::size_t t = 0; t < order.size(); ++t) pos[s.domain().position(order[t])] = static_cast<int>(t);
        std::vector<int> out(table.size());
        for (std::size_t k = 0; k < table.size(); ++k) out[k] = pos[table[k]];
        return out;
    };
    const auto d1 = distance_index(s1, order1), d2 = distance_index(s2, order2);
    const std::size_t v = v1 * v2;
    std::vector<Index> labels(v * v);
    for (std::size_t x = 0; x < v; ++x)
        for (std::size_t y = 0; y < v; ++y)
            labels[x * v + y] = {d1[(x / v2) * v1 + y / v2], d2[(x % v2) * v2 + y % v2]};
    return scheme_from_table(v, labels);
}

VertexScheme symmetrize(const VertexScheme& base, int N, const Config& cfg) {
    if (base.domain() != Domain({ORIGIN, X10, Y01})) throw std::invalid_argument("symmetrize needs a two-class base labelled (1,0), (0,1)");
    if (N < 1) throw std::invalid_argument("symmetrize needs N >= 1");
    const std::size_t b = base.vertex_count();
    const std::size_t v = checked_power(b, N, cfg, "symmetrize");
    const auto btable = base.class_table();
    std::vector<Index> labels(v * v);
    std::vector<std::size_t> dx(static_cast<std::size_t>(N));
    for (std::size_t x = 0; x < v; ++x) {
        for (std::size_t t = 0, r = x; t < dx.size(); ++t, r /= b) dx[t] = r % b;
        for (std::size_t y = 0; y < v; ++y) {
            Index lab{0, 0};
            std::size_t r = y;
            for (std::size_t t = 0; t < dx.size(); ++t, r /= b) {
                const auto c = btable[dx[t] * b + r % b];
                if (c == 1) ++lab.i;
                if (c == 2) ++lab.j;
            }
            labels[x * v + y] = lab;
        }
    }
    return scheme_from_table(v, labels);
}

VertexScheme ordered_hamming(int q, int N, const Config& cfg) { return symmetrize(hamming2(q, cfg), N, cfg); }

// ---------------------------------------------------------------- non-binary Johnson

std::vector<std::vector<int>> nbj_words(int r, int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int weight) -> void {
        if (pos == n) {
            if (weight == k) out.push_back(w);
            return;
        }
        for (int a = 0; a < r; ++a) {
            const int nw = weight + (a != 0);
            if (nw > k || nw + (n - pos - 1) < k) continue;
            w[static_cast<std::size_t>(pos)] = a;
            self(self, pos + 1, nw);
        }
    };
    rec(rec, 0, 0);
    return out;
}

VertexScheme nonbinary_johnson(int r, int n, int k, const Config& cfg) {
    if (r < 3) throw std::invalid_argument("nonbinary_johnson needs r >= 3");
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("nonbinary_johnson needs 0 <= k <= n and n >= 1");
    const Rational count = binom(n, k) * power(Rational(r - 1), k);
    if (count > Rational(static_cast<unsigned long>(cfg.max_vertices)))
        throw ResourceGuardExceeded("nonbinary_johnson: " + count.get_str() + " vertices exceeds max_vertices");
    const auto words = nbj_words(r, n, k);
    return scheme_from_relations(
        words,
        [k](const std::vector<int>& x, const std::vector<int>& y) {
            int e = 0, c = 0;
            for (std::size_t t = 0; t < x.size(); ++t)
                if (x[t] != 0 && y[t] != 0) {
                    ++c;
                    if (x[t] == y[t]) ++e;
                }
            return Index{c - e, k - c};
        },
        cfg);
}

ProjectionResult nbj_projection(const VertexScheme& oh, int N, int k) {
    if (N < 1 || k < 0 || 2 * k > N) throw std::invalid_argument("nbj_projection needs 0 <= k <= N/2");
    std::size_t expected = 1;
    for (int t = 0; t < N; ++t) expected *= 4;
    if (oh.vertex_count() != expected || oh.domain() != Domain::triangle(N))
        throw std::invalid_argument("nbj_projection needs ordered_hamming(2, N)");

    ProjectionResult out;
    const Index target{N - k, 0};
    for (std::size_t y = 0; y < oh.vertex_count(); ++y)
        if (oh.relation(0, y) == target) out.vertices.push_back(y);
    const std::size_t w = out.vertices.size();

    std::vector<Index> labels(w * w);
    for (std::size_t a = 0; a < w; ++a)
        for (std::size_t b = 0; b < w; ++b) labels[a * w + b] = *oh.relation(out.vertices[a], out.vertices[b]);
    const VertexScheme restricted = scheme_from_table(w, labels);
    out.axioms = verify_axioms(restricted);
    if (!out.axioms.passed()) throw VerificationFailure("restriction to W_k is not an association scheme");
    for (const auto& e : restricted.domain())
        if (e.i % 2 != 0 || e.i / 2 > k || e.j > N - k - e.i / 2)
            throw VerificationFailure("restriction uses class " + to_string(e) + " outside {A_{2s,j}}");

    // Symbols of the base coordinates: 0 for vertex 0, 1 and 2 for its neighbours.
    std::vector<int> symbol(4, -1);
    symbol[0] = 0;
    int next = 1;
    for (std::size_t b = 1; b < 4; ++b)
        if (oh.relation(0, b) == X10) symbol[b] = next++;

    const VertexScheme J = nonbinary_johnson(3, N, N - k);
    const auto words = nbj_words(3, N, N - k);
    std::map<std::vector<int>, std::size_t> index_of;
    for (std::size_t t = 0; t < words.size(); ++t) index_of[words[t]] = t;

    std::vector<std::size_t> image(w);
    std::vector<bool> hit(words.size(), false);
    out.isomorphic = w == words.size();
    for (std::size_t a = 0; a < w && out.isomorphic; ++a) {
        std::vector<int> word(static_cast<std::size_t>(N));
        std::size_t r = out.vertices[a];
        for (int t = 0; t < N; ++t, r /= 4) {
            word[static_cast<std::size_t>(t)] = symbol[r % 4];
        }
        const auto it = index_of.find(word);
        if (it == index_of.end() || hit[it->second]) {
            out.isomorphic = false;
            out.detail = "vertex " + std::to_string(out.vertices[a]) + " has no distinct image";
            break;
        }
        hit[it->second] = true;
        image[a] = it->second;
    }
    for (std::size_t a = 0; a < w && out.isomorphic; ++a)
        for (std::size_t b = 0; b < w; ++b) {
            const Index from = labels[a * w + b];
            const Index to = *J.relation(image[a], image[b]);
            const auto [it, inserted] = out.class_map.emplace(from, to);
            if (!inserted && it->second != to) {
                out.isomorphic = false;
                out.detail = "class " + to_string(from) + " maps to both " + to_string(it->second) + " and " + to_string(to);
                break;
            }
        }
    if (out.isomorphic) {
        std::set<Index> targets;
        for (const auto& [from, to] : out.class_map) targets.insert(to);
        if (targets.size() != out.class_map.size() || targets.size() != J.class_count()) {
            out.isomorphic = false;
            out.detail = "class map is not a bijection";
        }
    }
    out.scheme = out.isomorphic ? relabel(restricted, out.class_map) : restricted;
    if (out.isomorphic) out.detail = "isomorphic to J_3(" + std::to_string(N) + "," + std::to_string(N - k) + ")";
    return out;
}

// ---------------------------------------------------------------- 24-cell

IntersectionTensor cell24_numbered(const Rational& s, const Rational& l) {
    const Rational a = 16 * l * s * s;
    const Rational bp = 2 * (l - 1) * s * (4 * s + 1);
    const Rational bm = 2 * (l - 1) * s * (4 * s - 1);
    const Rational c = (4 * s - 1) * (4 * s + 1);
    const Rational h = 8 * l * s * s;
    const Matrix L1{{0, a, 0, 0, 0}, {1, bp, c, bm, 0}, {0, h, 0, h, 0}, {0, bm, c, bp, 1}, {0, 0, 0, a, 0}};
    const Matrix L2{{0, 0, 2 * c, 0, 0}, {0, c, 0, c, 0}, {1, 0, 32 * s * s - 4, 0, 1}, {0, c, 0, c, 0}, {0, 0, 2 * c, 0, 0}};
    const Matrix L3{{0, 0, 0, a, 0}, {0, bm, c, bp, 1}, {0, h, 0, h, 0}, {1, bp, c, bm, 0}, {0, a, 0, 0, 0}};
    const Matrix L4{{0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}, {0, 1, 0, 0, 0}, {1, 0, 0, 0, 0}};
    for (const Matrix* L : {&L1, &L2, &L3})
        for (const auto& x : L->data())
            if (sgn(x) < 0 || !is_integer(x))
                throw std::invalid_argument("cell24: (s,l) = (" + s.get_str() + "," + l.get_str() + ") gives the entry " + x.get_str());
    IntersectionTensor t(Domain({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}}), {{{1, 0}, L1}, {{2, 0}, L2}, {{3, 0}, L3}, {{4, 0}, L4}});
    if (homomorphism_failure(t)) throw std::invalid_argument("cell24: L-matrices do not form a regular representation");
    return t;
}

std::map<Index, Index> cell24_relabeling() { return {{{1, 0}, {1, 1}}, {{2, 0}, {1, 0}}, {{3, 0}, {0, 1}}, {{4, 0}, {2, 0}}}; }

IntersectionTensor cell24(const Rational& s, const Rational& l) { return relabel(cell24_numbered(s, l), cell24_relabeling()); }

// ---------------------------------------------------------------- symplectic d = 2

IntersectionTensor symplectic_d2(long qi, long nu) {
    if (qi < 2) throw std::invalid_argument("symplectic_d2 needs q >= 2");
    if (nu < 3) throw std::invalid_argument("symplectic_d2 needs nu >= 3");
    const Rational q(qi);
    auto P = [&](long e) { return power(q, e); };
    const long d = nu;
    const Matrix L10{
        {0, (q + 1) * P(2 * d - 3), 0, 0, 0, 0},
        {1, (q - 1) * P(2 * d - 4), P(2 * d - 4) - 1, 0, P(2 * d - 2), 0},
        {0, (q - 1) * P(2 * d - 4), P(2 * d - 4), P(2 * d - 2), 0, 0},
        {0, 0, q, (2 * q * q - 1) * P(2 * d - 5), (q - 1) * P(2 * d - 3), q * (P(2 * d - 6) - 1)},
        {0, q + 1, 0, (q + 1) * (P(2 * d - 4) - 1), (q * q - 1) * P(2 * d - 4), 0},
        {0, 0, 0, (q * q - 1) * (q + 1) * P(2 * d - 5), 0, (q + 1) * P(2 * d - 5)},
    };
    const Matrix L01{
        {0, 0, (q + 1) * (P(2 * d - 3) - q) / (q - 1), 0, 0, 0},
        {0, P(2 * d - 4) - 1, (P(2 * d - 4) - 1) / (q - 1), q * q * (P(2 * d - 4) - 1) / (q - 1), 0, 0},
        {1, P(2 * d - 4), (P(2 * d - 4) - 1) / (q - 1) + q * q - 2, P(2 * d - 3), 0, P(3) * (P(2 * d - 6) - 1) / (q - 1)},
        {0, q, 1, (2 * q * q - 1) * (P(2 * d - 5) - 1) / (q - 1), P(2 * d - 3), q * (P(2 * d - 6) - 1) / (q - 1)},
        {0, 0, 0, (q + 1) * (P(2 * d - 4) - 1) / (q - 1), (q + 1) * (P(2 * d - 4) - 1), 0},
        {0, 0, (q + 1) * (q + 1), (q + 1) * (q + 1) * P(2 * d - 5), 0, (q + 1) * (P(2 * d - 5) - q * q - q + 1) / (q - 1)},
    };
    // Row and column order of the published tables.
    const std::vector<Index> order{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}};
    return tensor_from_tables(order, {{X10, L10}, {Y01, L01}});
}

// ---------------------------------------------------------------- attenuated spaces

Domain attenuated_domain(const AttenuatedParams& p) {
    if (p.q < 2) throw std::invalid_argument("attenuated space needs q >= 2");
    if (p.d < 0 || p.D < 0 || p.L < 0 || p.d > p.D) throw std::invalid_argument("attenuated space needs 0 <= d <= D and L >= 0");
    std::vector<Index> pts;
    const long jmax = std::min(p.d, p.D - p.d);
    for (long j = 0; j <= jmax; ++j) {
        const long imax = p.L >= p.d ? p.d - j : std::min(p.d - j, p.L);
        for (long i = 0; i <= imax; ++i) pts.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
    return Domain(pts);
}

IntersectionTensor attenuated_rows(const AttenuatedParams& p) {
    const Domain dom = attenuated_domain(p);
    const Rational q(p.q);
    const long d = p.d, D = p.D, L = p.L;
    auto Q = [&](long n) { return qnumber(n, q); };
    auto P = [&](long e) { return power(q, e); };
    Matrix L10(dom.size(), dom.size()), L01(dom.size(), dom.size());
    auto put = [&](Matrix& M, const Index& from, long i, long j, const Rational& coef) {
        if (i < 0 || j < 0) return;
        const Index to{static_cast<int>(i), static_cast<int>(j)};
        if (!dom.contains(to) || sgn(coef) == 0) return;
        M(dom.position(to), dom.position(from)) += coef;
    };
    for (const auto& e : dom) {
        const long i = e.i, j = e.j;
        const Rational qL = P(L), qi1 = P(i - 1);
        put(L10, e, i - 1, j, (qL - qi1) * Q(d - i - j + 1) * P(i + j - 1));
        put(L10, e, i + 1, j, Q(i + 1) * P(i + j));
        put(L10, e, i, j, (qL - 1) * Q(i + j) - Q(i) * P(i + j - 1) + (q - 1) * P(i + j) * Q(d - i - j) * Q(i));

        put(L01, e, i, j - 1, P(2 * j + i + L - 1) * Q(d - i - j + 1) * Q(D - d - j + 1));
        put(L01, e, i, j + 1, Q(j + 1) * Q(j + 1) * P(i));
        put(L01, e, i - 1, j, Q(d - i - j + 1) * Q(j) * (qL - qi1) * P(i + j));
        put(L01, e, i + 1, j, Q(i + 1) * Q(j) * P(i + j + 1));
        put(L01, e, i - 1, j + 1, Q(j + 1) * Q(j + 1) * (qL - qi1));
        put(L01, e, i + 1, j - 1, Q(i + 1) * Q(D - d - j + 1) * P(2 * j + L - 1));
        put(L01, e, i, j,
            Q(j) * (Q(D - d - j) * P(L + 1 + j) + Q(d - i - j) * P(j + 2 * i + 1) + Q(i) * (qL - qi1) * P(j + 1) +
                    Q(j) * (q - 1) * P(L)));
    }
    std::map<Index, Matrix> lm;
    if (dom.contains(X10)) lm.emplace(X10, std::move(L10));
    if (dom.contains(Y01)) lm.emplace(Y01, std::move(L01));
    return IntersectionTensor(dom, std::move(lm));
}

// ---------------------------------------------------------------- dual labelers

DualLabeler symmetrized_dual_labeler(const SrgParams& base, int N) {
    if (!base.theta || !base.tau) throw std::invalid_argument("symmetrized_dual_labeler needs the base eigenvalues");
    const Rational k = base.k, th = *base.theta, ta = *base.tau, kb = base.k * base.b / base.c;
    return [=](const Domain& d, std::span<const Rational> row) -> std::optional<Index> {
        const Rational& theta = row[d.position(X10)];
        const Rational& mu = row[d.position(Y01)];
        for (int i = 0; i <= N; ++i)
            for (int j = 0; i + j <= N; ++j) {
                const Rational t = (N - i - j) * k + i * th + j * ta;
                const Rational m = (N - i - j) * kb - i * (th + 1) - j * (ta + 1);
                if (t == theta && m == mu) return Index{i, j};
            }
        return std::nullopt;
    };
}

std::vector<Index> nbj_dual_domain(int n, int k) {
    std::vector<Index> out;
    for (int x = 0; x <= k; ++x)
        for (int y = x; y <= x + std::min(k - x, n - k); ++y) out.push_back({x, y});
    return out;
}

DualLabeler nbj_dual_labeler(int r, int n, int k) {
    const auto grid = nbj_dual_domain(n, k);
    return [=](const Domain& d, std::span<const Rational> row) -> std::optional<Index> {
        for (const auto& xy : grid) {
            bool match = true;
            for (std::size_t c = 0; c < d.size() && match; ++c)
                match = row[c] == nbj_eigenvalue(d[c].i, d[c].j, xy.i, xy.j, r, n, k);
            if (match) return xy;
        }
        return std::nullopt;
    };
}

}  // namespace bivar
