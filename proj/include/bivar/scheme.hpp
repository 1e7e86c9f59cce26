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

#ifndef BIVAR_SCHEME_HPP
#define BIVAR_SCHEME_HPP

#include "bivar/errors.hpp"
#include "bivar/exact.hpp"
#include "bivar/orders.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace bivar {

/// Square 0/1 matrix packed 64 entries per word.
class BitMatrix {
  public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n);

    static BitMatrix from_matrix(const Matrix& m);
    Matrix to_matrix() const;

    std::size_t size() const noexcept { return n_; }
    std::size_t words_per_row() const noexcept { return w_; }
    bool test(std::size_t r, std::size_t c) const { return (bits_[r * w_ + c / 64] >> (c % 64)) & 1u; }
    void set(std::size_t r, std::size_t c) { bits_[r * w_ + c / 64] |= std::uint64_t{1} << (c % 64); }
    const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * w_; }

    std::size_t row_count(std::size_t r) const;
    std::size_t count() const;
    BitMatrix transpose() const;
    bool is_symmetric() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  private:
    std::size_t n_ = 0;
    std::size_t w_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Number of common set bits of two packed rows.
std::size_t and_count(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);

/**
 * @brief Scheme given by its 0/1 adjacency matrices, one per domain point.
 *
 * Matrices are stored packed; adjacency() materializes an exact matrix.
 */
class VertexScheme {
  public:
    VertexScheme() = default;
    /// @p matrices follow the deg-lex order of @p domain.
    VertexScheme(Domain domain, std::vector<BitMatrix> matrices);

    const Domain& domain() const noexcept { return domain_; }
    std::size_t vertex_count() const noexcept { return v_; }
    std::size_t class_count() const noexcept { return matrices_.size(); }

    const BitMatrix& bits(const Index& label) const { return matrices_.at(domain_.position(label)); }
    const BitMatrix& bits_at(std::size_t position) const { return matrices_.at(position); }
    Matrix adjacency(const Index& label) const { return bits(label).to_matrix(); }

    /// Label of the first class containing (x,y), if any.
    std::optional<Index> relation(std::size_t x, std::size_t y) const;
    /// Position of the class of every pair, row-major; throws when the classes do not partition.
    std::vector<std::uint16_t> class_table() const;

    friend bool operator==(const VertexScheme&, const VertexScheme&) = default;

  private:
    Domain domain_;
    std::size_t v_ = 0;
    std::vector<BitMatrix> matrices_;
};

struct AxiomResult {
    std::string axiom;
    bool passed = true;
    std::string witness;
};

struct AxiomReport {
    std::vector<AxiomResult> results;
    bool passed() const;
    const AxiomResult& operator[](const std::string& axiom) const;
};

/// Axioms (i) identity, (ii) partition of the all-ones matrix, (iii) symmetry, (iv) closure.
AxiomReport verify_axioms(const VertexScheme& s);

/**
 * @brief Structure constants p_{ab}^c stored as L-matrices, (L_a)_{c,b} = p_{ab}^c.
 *
 * Only some left factors may be present (partial tensor). Rows and columns follow
 * the deg-lex order of the domain.
 */
class IntersectionTensor {
  public:
    IntersectionTensor() = default;
    IntersectionTensor(Domain domain, std::map<Index, Matrix> lmatrices, bool vertex_sourced = false);

    const Domain& domain() const noexcept { return domain_; }
    bool vertex_sourced() const noexcept { return vertex_sourced_; }
    bool has_row(const Index& left) const { return left == Index{0, 0} || lmatrices_.count(left) > 0; }
    bool full() const;
    std::vector<Index> rows() const;

    /// p_{a,b}^c; falls back to p_{b,a}^c when only the row of b is stored.
    Rational p(const Index& a, const Index& b, const Index& c) const;
    /// Throws std::out_of_range when the row is missing.
    Matrix lmatrix(const Index& left) const;
    const std::map<Index, Matrix>& lmatrices() const noexcept { return lmatrices_; }

    /// Nonzero entries keyed by (a,b,c).
    std::map<std::tuple<Index, Index, Index>, Rational> entries() const;

    /// k_b = p_{b,b}^{00}.
    Rational valence(const Index& b) const;
    /// Sum of valences, available when every valence is.
    std::optional<Rational> vertex_count() const;

    friend bool operator==(const IntersectionTensor&, const IntersectionTensor&) = default;

  private:
    Domain domain_;
    std::map<Index, Matrix> lmatrices_;
    bool vertex_sourced_ = false;
};

/// A scheme known only through (part of) its intersection numbers.
using AlgebraScheme = IntersectionTensor;

Matrix lmatrix(const IntersectionTensor& t, const Index& left);

/**
 * Counts p_{ab}^c on a representative pair of class c and re-counts on a second one,
 * then checks the regular representation L_a L_b = sum_c p_{ab}^c L_c. With
 * cfg.strict_intersection every vertex pair is counted. Throws InconsistentScheme.
 */
IntersectionTensor intersection_numbers(const VertexScheme& s, const Config& cfg = {});

/// First failure of L_a L_b = sum_c p_{ab}^c L_c, as (a,b), over all stored rows.
std::optional<std::pair<Index, Index>> homomorphism_failure(const IntersectionTensor& t);

/// Builds the scheme from a row-major v*v label table; the label set becomes the domain.
VertexScheme scheme_from_table(std::size_t v, const std::vector<Index>& labels);

/**
 * @brief Classifies every vertex pair and builds the 0/1 matrices per label.
 *
 * Throws std::invalid_argument when classify is not symmetric or a diagonal pair
 * is not labelled (0,0).
 */
template <class V, class Classify>
VertexScheme scheme_from_relations(const std::vector<V>& vertices, Classify classify, const Config& cfg = {}) {
    const std::size_t v = vertices.size();
    guard_vertices(v, cfg, "scheme_from_relations");
    std::vector<Index> labels(v * v);
    for (std::size_t x = 0; x < v; ++x) {
        const Index d = classify(vertices[x], vertices[x]);
        if (d != Index{0, 0})
            throw std::invalid_argument("diagonal pair of vertex " + std::to_string(x) + " labelled " + to_string(d));
        labels[x * v + x] = d;
        for (std::size_t y = x + 1; y < v; ++y) {
            const Index a = classify(vertices[x], vertices[y]);
            const Index b = classify(vertices[y], vertices[x]);
            if (a != b)
                throw std::invalid_argument("classify is not symmetric on (" + std::to_string(x) + "," + std::to_string(y) + ")");
            labels[x * v + y] = labels[y * v + x] = a;
        }
    }
    return scheme_from_table(v, labels);
}

/// Renames classes; @p relabel maps old labels to new ones.
VertexScheme relabel(const VertexScheme& s, const std::map<Index, Index>& relabel);
IntersectionTensor relabel(const IntersectionTensor& t, const std::map<Index, Index>& relabel);

}  // namespace bivar

#endif
