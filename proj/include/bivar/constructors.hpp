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

#ifndef BIVAR_CONSTRUCTORS_HPP
#define BIVAR_CONSTRUCTORS_HPP

#include "bivar/errors.hpp"
#include "bivar/exact.hpp"
#include "bivar/scheme.hpp"
#include "bivar/spectra.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bivar {

/// Strongly regular parameters in the (k, b, c) form, optionally with eigenvalues theta > tau.
struct SrgParams {
    Rational k, b, c;
    std::optional<Rational> theta, tau;

    SrgParams(Rational k, Rational b, Rational c);
    /// b = -(theta+1)(tau+1), c = k + theta tau
    static SrgParams from_eigenvalues(const Rational& k, const Rational& theta, const Rational& tau);

    /// (k(b+c) + c)/c
    Rational v() const;
    Matrix L1() const;
    Matrix L2() const;
};

/// Two-class algebra-level scheme with A10 = A1, A01 = A2.
IntersectionTensor srg_tensor(const SrgParams& p);

/// {I, J - I} on v vertices, classes (0,0) and (1,0); a single vertex gives {I}.
VertexScheme complete_scheme(std::size_t v);
/// 4-cycle, A10 = distance 1, A01 = distance 2.
VertexScheme cycle4();
/// H(2,q): words of length 2, A10 = distance 1, A01 = distance 2.
VertexScheme hamming2(int q, const Config& cfg = {});
/// Petersen graph as the Kneser graph K(5,2), A10 = disjoint pairs.
VertexScheme petersen();

/**
 * A_ij = A_i (x) B_j. @p order1 and @p order2 list the classes of each factor as
 * A_0, A_1, ...; by default the deg-lex order of its domain.
 */
VertexScheme direct_product(const VertexScheme& s1, const VertexScheme& s2, std::vector<Index> order1 = {},
                            std::vector<Index> order2 = {}, const Config& cfg = {});

/**
 * N-fold symmetrization of a two-class scheme. Vertex x = sum_t x_t v^t; a pair is in
 * class (i,j) when i coordinates are in base class (1,0) and j in (0,1).
 */
VertexScheme symmetrize(const VertexScheme& base, int N, const Config& cfg = {});

/// symmetrize(hamming2(q), N)
VertexScheme ordered_hamming(int q, int N, const Config& cfg = {});

/// Weight-k words of length n over {0..r-1}, in lexicographic order.
std::vector<std::vector<int>> nbj_words(int r, int n, int k);

/// J_r(n,k) with class (c-e, k-c) for e equal and c common nonzero coordinates.
VertexScheme nonbinary_johnson(int r, int n, int k, const Config& cfg = {});

struct ProjectionResult {
    /// Restriction to W_k, relabelled with the classes of J_3(N, N-k).
    VertexScheme scheme;
    AxiomReport axioms;
    /// Ordered Hamming vertices spanning W_k, in increasing order.
    std::vector<std::size_t> vertices;
    /// Ordered Hamming class to J_3(N,N-k) class.
    std::map<Index, Index> class_map;
    bool isomorphic = false;
    std::string detail;
};

/**
 * Restricts ordered_hamming(2,N) to W_k = {y : (0,y) in R_{N-k,0}} and compares it
 * with J_3(N,N-k). Coordinates of y are read as 0 for base vertex 0 and as 1, 2 for its
 * two neighbours; the restriction is isomorphic when this vertex bijection maps classes
 * consistently. Throws VerificationFailure when the restriction is not a scheme.
 */
ProjectionResult nbj_projection(const VertexScheme& oh, int N, int k);

/// L_0..L_4 of the generalized 24-cell with the classes in the order A_t = (t,0).
IntersectionTensor cell24_numbered(const Rational& s, const Rational& l);
/// A00 = A0, A10 = A2, A01 = A3, A11 = A1, A20 = A4.
IntersectionTensor cell24(const Rational& s, const Rational& l);
/// Old (t,0) label to the bivariate label used by cell24.
std::map<Index, Index> cell24_relabeling();

/// Rows (1,0) and (0,1) of the symplectic d = 2 isotropic scheme; domain {i+j <= 2}.
IntersectionTensor symplectic_d2(long q, long nu);

struct AttenuatedParams {
    long q = 2;
    long d = 0, D = 0, L = 0;
};

/// Domain {j <= min(d,D-d), i+j <= d} when L >= d, else {j <= min(d,D-d), i <= min(d-j,L)}.
Domain attenuated_domain(const AttenuatedParams& p);
/// Rows (1,0) and (0,1) of the attenuated space scheme.
IntersectionTensor attenuated_rows(const AttenuatedParams& p);

/// Dual labels (i,j) of the N-fold symmetrization from theta_ij and mu_ij.
DualLabeler symmetrized_dual_labeler(const SrgParams& base, int N);
/// Dual labels (x,y) of J_r(n,k) by matching rows of nbj_eigenvalue.
DualLabeler nbj_dual_labeler(int r, int n, int k);
/// {(x,y) : 0 <= x <= k, x <= y <= x + min(k-x, n-k)}
std::vector<Index> nbj_dual_domain(int n, int k);

}  // namespace bivar

#endif
