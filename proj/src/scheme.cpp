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

#include "bivar/scheme.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bivar {

// ---------------------------------------------------------------- BitMatrix

BitMatrix::BitMatrix(std::size_t n) : n_(n), w_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

BitMatrix BitMatrix::from_matrix(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("adjacency matrix must be square");
    BitMatrix b(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m(r, c) == 1)
                b.set(r, c);
            else if (sgn(m(r, c)) != 0)
                throw std::invalid_argument("adjacency matrix entry is not 0/1");
        }
    return b;
}

Matrix BitMatrix::to_matrix() const {
    Matrix m(n_, n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c)
            if (test(r, c)) m(r, c) = 1;
    return m;
}

std::size_t BitMatrix::row_count(std::size_t r) const {
    std::size_t k = 0;
    for (std::size_t w = 0; w < w_; ++w) k += static_cast<std::size_t>(std::popcount(bits_[r * w_ + w]));
    return k;
}

std::size_t BitMatrix::count() const {
    std::size_t k = 0;
    for (auto w : bits_) k += static_cast<std::size_t>(std::popcount(w));
    return k;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c)
            if (test(r, c)) t.set(c, r);
    return t;
}

bool BitMatrix::is_symmetric() const { return *this == transpose(); }

std::size_t and_count(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::size_t k = 0;
    for (std::size_t w = 0; w < words; ++w) k += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
    return k;
}

// ---------------------------------------------------------------- VertexScheme

VertexScheme::VertexScheme(Domain domain, std::vector<BitMatrix> matrices)
    : domain_(std::move(domain)), matrices_(std::move(matrices)) {
    if (matrices_.size() != domain_.size()) throw std::invalid_argument("one matrix per domain point required");
    v_ = matrices_.front().size();
    for (const auto& m : matrices_)
        if (m.size() != v_) throw std::invalid_argument("adjacency matrices of different sizes");
}

std::optional<Index> VertexScheme::relation(std::size_t x, std::size_t y) const {
    for (std::size_t k = 0; k < matrices_.size(); ++k)
        if (matrices_[k].test(x, y)) return domain_[k];
    return std::nullopt;
}

std::vector<std::uint16_t> VertexScheme::class_table() const {
    constexpr std::uint16_t unset = 0xffff;
    std::vector<std::uint16_t> table(v_ * v_, unset);
    for (std::size_t k = 0; k < matrices_.size(); ++k)
        for (std::size_t x = 0; x < v_; ++x)
            for (std::size_t y = 0; y < v_; ++y)
                if (matrices_[k].test(x, y)) {
                    if (table[x * v_ + y] != unset) throw InconsistentScheme("classes overlap at (" + std::to_string(x) + "," + std::to_string(y) + ")");
                    table[x * v_ + y] = static_cast<std::uint16_t>(k);
                }
    for (std::size_t k = 0; k < table.size(); ++k)
        if (table[k] == unset)
            throw InconsistentScheme("pair (" + std::to_string(k / v_) + "," + std::to_string(k % v_) + ") in no class");
    return table;
}

// ---------------------------------------------------------------- axioms

bool AxiomReport::passed() const {
    return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.passed; });
}

const AxiomResult& AxiomReport::operator[](const std::string& axiom) const {
    for (const auto& r : results)
        if (r.axiom == axiom) return r;
    throw std::out_of_range("no axiom " + axiom);
}

namespace {

std::string entry(const Index& label, std::size_t x, std::size_t y) {
    return "A" + to_string(label) + " entry (" + std::to_string(x) + "," + std::to_string(y) + ")";
}

// First cell where some product A_a A_b fails to be constant on a class, or fails to commute.
std::optional<std::string> closure_failure(const VertexScheme& s, const std::vector<std::uint16_t>& table, bool symmetric) {
    const std::size_t v = s.vertex_count(), nc = s.class_count();
    std::vector<BitMatrix> transposed;
    if (!symmetric)
        for (std::size_t k = 0; k < nc; ++k) transposed.push_back(s.bits_at(k).transpose());
    auto column_rows = [&](std::size_t k) -> const BitMatrix& { return symmetric ? s.bits_at(k) : transposed[k]; };
    const std::size_t words = s.bits_at(0).words_per_row();
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);
    for (std::size_t a = 0; a < nc; ++a)
        for (std::size_t b = symmetric ? a : 0; b < nc; ++b) {
            std::vector<std::size_t> seen(nc, unseen);
            std::vector<std::pair<std::size_t, std::size_t>> where(nc);
            const BitMatrix& A = s.bits_at(a);
            const BitMatrix& BT = column_rows(b);
            for (std::size_t x = 0; x < v; ++x)
                for (std::size_t y = 0; y < v; ++y) {
                    const std::size_t n = and_count(A.row(x), BT.row(y), words);
                    const std::size_t c = table[x * v + y];
                    if (!symmetric) {
                        const std::size_t m = and_count(s.bits_at(b).row(x), column_rows(a).row(y), words);
                        if (m != n) {
                            std::ostringstream os;
                            os << "A" << s.domain()[a] << "A" << s.domain()[b] << " != A" << s.domain()[b] << "A" << s.domain()[a]
                               << " at (" << x << "," << y << ")";
                            return os.str();
                        }
                    }
                    if (seen[c] == unseen) {
                        seen[c] = n;
                        where[c] = {x, y};
                    } else if (seen[c] != n) {
                        std::ostringstream os;
                        os << "A" << s.domain()[a] << "A" << s.domain()[b] << " not constant on class " << s.domain()[c] << ": "
                           << seen[c] << " at (" << where[c].first << "," << where[c].second << "), " << n << " at (" << x << ","
                           << y << ")";
                        return os.str();
                    }
                }
        }
    return std::nullopt;
}

}  // namespace

AxiomReport verify_axioms(const VertexScheme& s) {
    AxiomReport report;
    const std::size_t v = s.vertex_count();
    const Domain& d = s.domain();

    AxiomResult ident{"i", true, ""};
    const BitMatrix& I = s.bits({0, 0});
    for (std::size_t x = 0; x < v && ident.passed; ++x)
        for (std::size_t y = 0; y < v; ++y)
            if (I.test(x, y) != (x == y)) {
                ident = {"i", false, entry({0, 0}, x, y) + " differs from the identity"};
                break;
            }
    report.results.push_back(ident);

    AxiomResult part{"ii", true, ""};
    std::vector<std::uint16_t> table;
    for (std::size_t k = 0; k < s.class_count() && part.passed; ++k)
        if (s.bits_at(k).count() == 0) part = {"ii", false, "A" + to_string(d[k]) + " is zero"};
    if (part.passed) {
        std::vector<std::uint16_t> cover(v * v, 0);
        for (std::size_t k = 0; k < s.class_count(); ++k)
            for (std::size_t x = 0; x < v; ++x)
                for (std::size_t y = 0; y < v; ++y)
                    if (s.bits_at(k).test(x, y)) ++cover[x * v + y];
        for (std::size_t c = 0; c < cover.size(); ++c)
            if (cover[c] != 1) {
                part = {"ii", false,
                        "entry (" + std::to_string(c / v) + "," + std::to_string(c % v) + ") of the sum is " + std::to_string(cover[c])};
                break;
            }
        if (part.passed) table = s.class_table();
    }
    report.results.push_back(part);

    AxiomResult sym{"iii", true, ""};
    for (std::size_t k = 0; k < s.class_count() && sym.passed; ++k) {
        const BitMatrix& A = s.bits_at(k);
        for (std::size_t x = 0; x < v && sym.passed; ++x)
            for (std::size_t y = x + 1; y < v; ++y)
                if (A.test(x, y) != A.test(y, x)) {
                    sym = {"iii", false, entry(d[k], x, y) + " differs from its transpose"};
                    break;
                }
    }
    report.results.push_back(sym);

    AxiomResult clos{"iv", true, ""};
    if (!part.passed) {
        clos = {"iv", false, "not checked: the classes do not partition the all-ones matrix"};
    } else if (auto w = closure_failure(s, table, sym.passed)) {
        clos = {"iv", false, *w};
    }
    report.results.push_back(clos);
    return report;
}

// ---------------------------------------------------------------- IntersectionTensor

IntersectionTensor::IntersectionTensor(Domain domain, std::map<Index, Matrix> lmatrices, bool vertex_sourced)
    : domain_(std::move(domain)), lmatrices_(std::move(lmatrices)), vertex_sourced_(vertex_sourced) {
    const std::size_t n = domain_.size();
    const std::size_t zero = 0;
    for (const auto& [a, L] : lmatrices_) {
        if (!domain_.contains(a)) throw std::invalid_argument("row " + to_string(a) + " outside the domain");
        if (L.rows() != n || L.cols() != n) throw std::invalid_argument("L-matrix of row " + to_string(a) + " has wrong size");
        const std::size_t pa = domain_.position(a);
        for (std::size_t c = 0; c < n; ++c)
            if (L(c, zero) != (c == pa ? 1 : 0))
                throw std::invalid_argument("row " + to_string(a) + ": multiplication by A00 is not the identity");
    }
    const auto it = lmatrices_.find({0, 0});
    if (it != lmatrices_.end()) {
        if (it->second != Matrix::identity(n)) throw std::invalid_argument("L00 must be the identity");
        lmatrices_.erase(it);
    }
}

bool IntersectionTensor::full() const {
    for (const auto& e : domain_)
        if (!has_row(e)) return false;
    return true;
}

std::vector<Index> IntersectionTensor::rows() const {
    std::vector<Index> out;
    for (const auto& e : domain_)
        if (e != Index{0, 0} && lmatrices_.count(e)) out.push_back(e);
    return out;
}

Rational IntersectionTensor::p(const Index& a, const Index& b, const Index& c) const {
    if (a == Index{0, 0}) return b == c ? 1 : 0;
    if (b == Index{0, 0}) return a == c ? 1 : 0;
    const auto ia = lmatrices_.find(a);
    if (ia != lmatrices_.end()) return ia->second(domain_.position(c), domain_.position(b));
    const auto ib = lmatrices_.find(b);
    if (ib != lmatrices_.end()) return ib->second(domain_.position(c), domain_.position(a));
    throw std::out_of_range("tensor has neither row " + to_string(a) + " nor row " + to_string(b));
}

Matrix IntersectionTensor::lmatrix(const Index& left) const {
    if (left == Index{0, 0}) return Matrix::identity(domain_.size());
    const auto it = lmatrices_.find(left);
    if (it == lmatrices_.end()) throw std::out_of_range("tensor has no row " + to_string(left));
    return it->second;
}

std::map<std::tuple<Index, Index, Index>, Rational> IntersectionTensor::entries() const {
    std::map<std::tuple<Index, Index, Index>, Rational> out;
    for (const auto& [a, L] : lmatrices_)
        for (std::size_t c = 0; c < L.rows(); ++c)
            for (std::size_t b = 0; b < L.cols(); ++b)
                if (sgn(L(c, b)) != 0) out.emplace(std::tuple{a, domain_[b], domain_[c]}, L(c, b));
    return out;
}

Rational IntersectionTensor::valence(const Index& b) const { return p(b, b, {0, 0}); }

std::optional<Rational> IntersectionTensor::vertex_count() const {
    if (!full()) return std::nullopt;
    Rational v = 0;
    for (const auto& e : domain_) v += valence(e);
    return v;
}

Matrix lmatrix(const IntersectionTensor& t, const Index& left) { return t.lmatrix(left); }

std::optional<std::pair<Index, Index>> homomorphism_failure(const IntersectionTensor& t) {
    const auto rows = t.rows();
    for (std::size_t x = 0; x < rows.size(); ++x)
        for (std::size_t y = x; y < rows.size(); ++y) {
            const Index a = rows[x], b = rows[y];
            Matrix rhs(t.domain().size(), t.domain().size());
            bool available = true;
            for (const auto& c : t.domain()) {
                const Rational coeff = t.p(a, b, c);
                if (sgn(coeff) == 0) continue;
                if (!t.has_row(c)) {
                    available = false;
                    break;
                }
                rhs += coeff * t.lmatrix(c);
            }
            if (!available) continue;
            const Matrix La = t.lmatrix(a), Lb = t.lmatrix(b);
            if (La * Lb != rhs || Lb * La != rhs) return std::pair{a, b};
        }
    return std::nullopt;
}

IntersectionTensor intersection_numbers(const VertexScheme& s, const Config& cfg) {
    const std::size_t v = s.vertex_count(), n = s.class_count();
    const Domain& d = s.domain();
    for (std::size_t k = 0; k < n; ++k)
        if (!s.bits_at(k).is_symmetric()) throw InconsistentScheme("class " + to_string(d[k]) + " is not symmetric");
    const auto table = s.class_table();
    const std::size_t words = s.bits_at(0).words_per_row();

    // Representatives of each class on the first and on the last row.
    auto representative = [&](std::size_t x, std::size_t c) -> std::optional<std::size_t> {
        for (std::size_t y = 0; y < v; ++y)
            if (table[x * v + y] == c) return y;
        return std::nullopt;
    };
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> reps(n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t x : {std::size_t{0}, v - 1}) {
            if (auto y = representative(x, c)) reps[c].emplace_back(x, *y);
            if (v == 1) break;
        }
        if (reps[c].empty() || (v > 1 && reps[c].size() < 2))
            throw InconsistentScheme("class " + to_string(d[c]) + " is missing from a row");
    }

    std::map<Index, Matrix> lm;
    for (std::size_t a = 1; a < n; ++a) {
        Matrix L(n, n);
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                std::optional<std::size_t> value;
                for (const auto& [x, y] : reps[c]) {
                    const std::size_t cnt = and_count(s.bits_at(a).row(x), s.bits_at(b).row(y), words);
                    if (value && *value != cnt)
                        throw InconsistentScheme("p_{" + to_string(d[a]) + ";" + to_string(d[b]) + "}^{" + to_string(d[c]) +
                                                 "} differs between representatives");
                    value = cnt;
                }
                L(c, b) = static_cast<unsigned long>(*value);
            }
        lm.emplace(d[a], std::move(L));
    }
    IntersectionTensor t(d, std::move(lm), true);

    if (cfg.strict_intersection) {
        for (std::size_t x = 0; x < v; ++x)
            for (std::size_t y = 0; y < v; ++y) {
                const std::size_t c = table[x * v + y];
                for (std::size_t a = 1; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b)
                        if (t.p(d[a], d[b], d[c]) != static_cast<unsigned long>(and_count(s.bits_at(a).row(x), s.bits_at(b).row(y), words)))
                            throw InconsistentScheme("count differs at (" + std::to_string(x) + "," + std::to_string(y) + ")");
            }
    }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Rational sum = 0;
            for (std::size_t c = 0; c < n; ++c) sum += t.p(d[a], d[b], d[c]) * t.valence(d[c]);
            if (sum != t.valence(d[a]) * t.valence(d[b]))
                throw InconsistentScheme("row sums of A" + to_string(d[a]) + "A" + to_string(d[b]) + " disagree with the valences");
        }
    if (auto bad = homomorphism_failure(t))
        throw InconsistentScheme("regular representation fails for L" + to_string(bad->first) + " L" + to_string(bad->second));
    return t;
}

VertexScheme scheme_from_table(std::size_t v, const std::vector<Index>& labels) {
    if (labels.size() != v * v) throw std::invalid_argument("label table has wrong size");
    if (v == 0) throw std::invalid_argument("empty vertex set");
    std::set<Index, DegLexLess> seen(labels.begin(), labels.end());
    Domain d(std::vector<Index>(seen.begin(), seen.end()));
    std::vector<BitMatrix> mats(d.size(), BitMatrix(v));
    for (std::size_t x = 0; x < v; ++x)
        for (std::size_t y = 0; y < v; ++y) mats[d.position(labels[x * v + y])].set(x, y);
    return VertexScheme(std::move(d), std::move(mats));
}

namespace {

std::map<Index, Index> complete_bijection(const Domain& d, const std::map<Index, Index>& relabel) {
    std::map<Index, Index> full;
    std::set<Index> image;
    for (const auto& e : d) {
        const auto it = relabel.find(e);
        const Index to = it == relabel.end() ? e : it->second;
        if (!image.insert(to).second) throw std::invalid_argument("relabeling is not injective at " + to_string(to));
        full[e] = to;
    }
    for (const auto& [from, to] : relabel)
        if (!d.contains(from)) throw std::invalid_argument("relabeling names unknown class " + to_string(from));
    if (full.at({0, 0}) != Index{0, 0}) throw std::invalid_argument("relabeling must fix (0,0)");
    return full;
}

}  // namespace

VertexScheme relabel(const VertexScheme& s, const std::map<Index, Index>& relabel) {
    const auto full = complete_bijection(s.domain(), relabel);
    std::vector<Index> pts;
    for (const auto& [from, to] : full) pts.push_back(to);
    Domain nd(pts);
    std::vector<BitMatrix> mats(nd.size());
    for (const auto& [from, to] : full) mats[nd.position(to)] = s.bits(from);
    return VertexScheme(std::move(nd), std::move(mats));
}

IntersectionTensor relabel(const IntersectionTensor& t, const std::map<Index, Index>& relabel) {
    const auto full = complete_bijection(t.domain(), relabel);
    std::vector<Index> pts;
    for (const auto& [from, to] : full) pts.push_back(to);
    Domain nd(pts);
    const Domain& od = t.domain();
    std::map<Index, Matrix> lm;
    for (const auto& [a, L] : t.lmatrices()) {
        Matrix M(nd.size(), nd.size());
        for (std::size_t c = 0; c < od.size(); ++c)
            for (std::size_t b = 0; b < od.size(); ++b) M(nd.position(full.at(od[c])), nd.position(full.at(od[b]))) = L(c, b);
        lm.emplace(full.at(a), std::move(M));
    }
    return IntersectionTensor(std::move(nd), std::move(lm), t.vertex_sourced());
}

}  // namespace bivar
