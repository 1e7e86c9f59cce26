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

#ifndef BIVAR_SPECTRA_HPP
#define BIVAR_SPECTRA_HPP

#include "bivar/bivariate_p.hpp"
#include "bivar/errors.hpp"
#include "bivar/exact.hpp"
#include "bivar/orders.hpp"
#include "bivar/scheme.hpp"

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

namespace bivar {

/**
 * @brief First and dual eigenmatrices of a scheme.
 *
 * P has rows indexed by the dual domain and columns by the domain, P(mn, ij) = p_ij(mn).
 * Q has rows indexed by the domain and columns by the dual domain, Q(ij, mn) = q_mn(ij),
 * so that P Q = v I.
 */
struct Spectrum {
    Domain domain;
    Domain dual_domain;
    Matrix P;
    Matrix Q;
    std::vector<Rational> valences;        ///< domain order
    std::vector<Rational> multiplicities;  ///< dual domain order
    Rational vertex_count;

    const Rational& p(const Index& ij, const Index& mn) const { return P(dual_domain.position(mn), domain.position(ij)); }
    const Rational& q(const Index& mn, const Index& ij) const { return Q(domain.position(ij), dual_domain.position(mn)); }
    const Rational& valence(const Index& ij) const { return valences[domain.position(ij)]; }
    const Rational& multiplicity(const Index& mn) const { return multiplicities[dual_domain.position(mn)]; }
    /// theta_mn = p_10(mn), mu_mn = p_01(mn)
    const Rational& theta(const Index& mn) const { return p({1, 0}, mn); }
    const Rational& mu(const Index& mn) const { return p({0, 1}, mn); }
};

/**
 * Names an eigenspace from its eigenvalue row (domain order). Returning nullopt makes
 * first_eigenmatrix throw.
 */
using DualLabeler = std::function<std::optional<Index>(const Domain& domain, std::span<const Rational> row)>;

/**
 * @brief Common eigenspaces of the L-matrices over Q.
 *
 * Splits by L10, then L01, then the remaining L-matrices. Each eigenspace yields the row
 * of eigenvalues. Without a labeler the trivial eigenspace is (0,0) and the others take the
 * remaining domain points in deg-lex order, sorted by decreasing (theta, mu, ...).
 * Throws NonRationalSpectrum or NonSeparated.
 */
Spectrum first_eigenmatrix(const IntersectionTensor& t, const DualLabeler& labeler = {});

/// Same spectrum with the dual domain renamed; @p relabel maps old to new dual labels.
Spectrum relabel_dual(const Spectrum& sp, const std::map<Index, Index>& relabel);

/// E_mn = (1/v) sum_ij q_mn(ij) A_ij, verified idempotent, orthogonal, summing to I, E00 = J/v.
std::map<Index, Matrix> idempotents(const VertexScheme& s, const Spectrum& sp);

/// Krein parameters as a tensor over the dual domain: E_a o E_b = (1/v) sum_c q_{ab}^c E_c.
IntersectionTensor krein_parameters(const VertexScheme& s, const Spectrum& sp, const std::map<Index, Matrix>& idems);

/// The metric checker applied to the Krein tensor.
MetricVerdict cometric_test(const IntersectionTensor& krein, const TypeParams& tp);

/// Dual polynomials from the Krein tensor, same induction as construct_vij.
PolyFamily construct_vstar(const IntersectionTensor& krein, const TypeParams& tp);

/// Checks v*_mn(vE10, vE01) = vE_mn under the Hadamard product; returns the first failing label.
std::optional<Index> vstar_failure(const PolyFamily& vstar, const std::map<Index, Matrix>& idems, const Rational& v);

struct CheckResult {
    bool passed = true;
    /// Labels of the first failing identity.
    std::vector<Index> witness;
};

/// q_mn(ij) k_ij = p_ij(mn) m_mn for every pair.
CheckResult wilson_check(const Spectrum& sp);

/// Row and column orthogonality of P and Q weighted by multiplicities and valences, with 1/v.
CheckResult orthogonality_check(const Spectrum& sp);

/// Diagonal dual adjacency matrices at a base vertex.
struct DualAdjacency {
    std::size_t base = 0;
    std::map<Index, Matrix> matrices;  ///< diagonal, keyed by dual label
};

/**
 * A*_mn = diag(v (E_mn)_{base, .}); verifies A*_a A*_b = sum_c q_{ab}^c A*_c.
 * Throws VerificationFailure.
 */
DualAdjacency dual_adjacency(const VertexScheme& s, const std::map<Index, Matrix>& idems, const IntersectionTensor& krein,
                             std::size_t base);

/// Checks A*_mn = v*_mn(A*10, A*01) with ordinary products; returns the first failing label.
std::optional<Index> dual_polynomial_failure(const DualAdjacency& da, const PolyFamily& vstar);

/// Sum_mn p_ij(mn) E_mn = A_ij for every class; returns the first failing class.
std::optional<Index> reconstruction_failure(const VertexScheme& s, const Spectrum& sp, const std::map<Index, Matrix>& idems);

}  // namespace bivar

#endif
