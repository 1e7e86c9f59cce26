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
#include "bivar/spectra.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace bivar;

namespace {

const Index I00{0, 0}, I10{1, 0}, I01{0, 1};
const Rational half(1, 2);

struct Computed {
    VertexScheme s;
    IntersectionTensor t;
    Spectrum sp;
    std::map<Index, Matrix> E;
};

Computed compute(VertexScheme s, const DualLabeler& labeler = {}) {
    IntersectionTensor t = intersection_numbers(s);
    Spectrum sp = first_eigenmatrix(t, labeler);
    auto E = idempotents(s, sp);
    return {std::move(s), std::move(t), std::move(sp), std::move(E)};
}

// Krein parameters from the eigenmatrix formula.
void check_krein_oracle(const Computed& c, const IntersectionTensor& kt) {
    const Spectrum& sp = c.sp;
    for (std::size_t a = 0; a < sp.dual_domain.size(); ++a)
        for (std::size_t b = 0; b < sp.dual_domain.size(); ++b)
            for (std::size_t d = 0; d < sp.dual_domain.size(); ++d)
                CHECK(kt.p(sp.dual_domain[a], sp.dual_domain[b], sp.dual_domain[d]) ==
                      oracle::krein(sp.P, sp.multiplicities, sp.valences, sp.vertex_count, a, b, d));
}

}  // namespace

TEST_CASE("trivial and C4 spectra") {
    const Spectrum one = first_eigenmatrix(intersection_numbers(complete_scheme(1)));
    CHECK(one.P == Matrix{{1}});
    const Computed c4 = compute(cycle4());
    CHECK(c4.sp.P == Matrix{{1, 2, 1}, {1, 0, -1}, {1, -2, 1}});
    CHECK(c4.sp.P * c4.sp.Q == Matrix::identity(3) * Rational(4));
    CHECK(c4.sp.multiplicities == std::vector<Rational>{1, 2, 1});
    CHECK(c4.E.at(I10).trace() == 2);
    CHECK(rank(c4.E.at(I10)) == 2);
    CHECK(c4.E.at(I00) == Matrix::ones(4, 4) * Rational(1, 4));
}

TEST_CASE("spectra of J3(4,2) match the closed form") {
    const Computed c = compute(nonbinary_johnson(3, 4, 2), nbj_dual_labeler(3, 4, 2));
    CHECK(c.sp.dual_domain == Domain(nbj_dual_domain(4, 2)));
    for (const auto& mn : c.sp.dual_domain)
        for (const auto& ij : c.sp.domain) CHECK(c.sp.p(ij, mn) == nbj_eigenvalue(ij.i, ij.j, mn.i, mn.j, 3, 4, 2));
    CHECK(wilson_check(c.sp).passed);
    CHECK(orthogonality_check(c.sp).passed);
    CHECK_FALSE(reconstruction_failure(c.s, c.sp, c.E));
    // Default labels give the same rows up to permutation.
    const Spectrum d = first_eigenmatrix(c.t);
    std::multiset<std::vector<Rational>> r1, r2;
    for (std::size_t r = 0; r < d.P.rows(); ++r) {
        r1.insert(d.P.row(r));
        r2.insert(c.sp.P.row(r));
    }
    CHECK(r1 == r2);
}

TEST_CASE("spectral identities on several schemes") {
    std::vector<Computed> all;
    all.push_back(compute(cycle4()));
    all.push_back(compute(petersen()));
    all.push_back(compute(ordered_hamming(2, 3)));
    all.push_back(compute(symmetrize(cycle4(), 2)));
    all.push_back(compute(direct_product(cycle4(), complete_scheme(3))));
    all.push_back(compute(nonbinary_johnson(3, 5, 2)));
    for (const auto& c : all) {
        const Spectrum& sp = c.sp;
        CHECK(sp.P * sp.Q == Matrix::identity(sp.domain.size()) * sp.vertex_count);
        CHECK(sp.P.row(sp.dual_domain.position(I00)) == sp.valences);
        for (const auto& ij : sp.domain) CHECK(sp.q(I00, ij) == 1);
        for (const auto& mn : sp.dual_domain) CHECK(sp.q(mn, I00) == sp.multiplicity(mn));
        for (const auto& mn : sp.dual_domain)
            for (const auto& ij : sp.domain) CHECK(sp.q(mn, ij) * sp.valence(ij) == sp.p(ij, mn) * sp.multiplicity(mn));
        CHECK(wilson_check(sp).passed);
        CHECK(orthogonality_check(sp).passed);
        CHECK_FALSE(reconstruction_failure(c.s, sp, c.E));
        // Rows are separated by (theta, mu).
        std::set<std::pair<Rational, Rational>> seen;
        for (const auto& mn : sp.dual_domain) CHECK(seen.insert({sp.theta(mn), sp.mu(mn)}).second);
    }
}

TEST_CASE("idempotents of the symmetrized 4-cycle") {
    const Computed c = compute(symmetrize(cycle4(), 2));
    CHECK(c.E.size() == 6);
    Matrix sum(16, 16);
    for (const auto& [a, Ea] : c.E) {
        CHECK(Ea * Ea == Ea);
        sum += Ea;
        for (const auto& [b, Eb] : c.E)
            if (a != b) CHECK((Ea * Eb).is_zero());
        CHECK(Ea.trace() == c.sp.multiplicity(a));
    }
    CHECK(sum == Matrix::identity(16));
}

TEST_CASE("Krein parameters") {
    const Computed c = compute(symmetrize(cycle4(), 2));
    const IntersectionTensor kt = krein_parameters(c.s, c.sp, c.E);
    check_krein_oracle(c, kt);
    for (const auto& [key, val] : kt.entries()) CHECK(val > 0);
    for (const auto& a : kt.domain())
        for (const auto& b : kt.domain()) CHECK(kt.p(a, I00, b) == (a == b ? 1 : 0));
    // Self-dual: same tensor as the intersection numbers.
    CHECK(kt.lmatrices() == c.t.lmatrices());
    const SrgTriple dual = dual_srg_params(2, 0, -2);
    CHECK(dual == SrgTriple{2, 1, 2});
    for (const auto& ij : kt.domain())
        for (const Index& left : {I10, I01}) {
            const auto expect = oracle::symmetrized(left, dual.k, dual.b, dual.c, 2, ij.i, ij.j);
            for (const auto& mn : kt.domain()) {
                const auto it = expect.find(mn);
                CHECK(kt.p(left, ij, mn) == (it == expect.end() ? Rational(0) : it->second));
            }
        }
    const Computed pet = compute(symmetrize(petersen(), 2));
    check_krein_oracle(pet, krein_parameters(pet.s, pet.sp, pet.E));
}

TEST_CASE("cometric tests") {
    const Computed c = compute(symmetrize(cycle4(), 2));
    const IntersectionTensor kt = krein_parameters(c.s, c.sp, c.E);
    CHECK(cometric_test(kt, TypeParams(0, half)).passed);
    CHECK(*minimal_type(kt).canonical == TypeParams(0, half));

    const Computed pet = compute(symmetrize(petersen(), 2), symmetrized_dual_labeler(SrgParams::from_eigenvalues(3, 1, -2), 2));
    const IntersectionTensor kp = krein_parameters(pet.s, pet.sp, pet.E);
    CHECK(cometric_test(kp, TypeParams(half, half)).passed);

    // Product labeling: each coordinate names the C4 eigenspace of theta = 2, 0, -2 as 0, 1, 2.
    const DualLabeler product = [](const Domain& d, std::span<const Rational> row) -> std::optional<Index> {
        auto label = [](const Rational& th) { return th == 2 ? 0 : th == 0 ? 1 : 2; };
        return Index{label(row[d.position(I10)]), label(row[d.position(I01)])};
    };
    const Computed prod = compute(direct_product(cycle4(), cycle4()), product);
    CHECK(cometric_test(krein_parameters(prod.s, prod.sp, prod.E), TypeParams(0, 0)).passed);
}

TEST_CASE("dual polynomials and dual adjacency") {
    const Computed c = compute(symmetrize(cycle4(), 2));
    const IntersectionTensor kt = krein_parameters(c.s, c.sp, c.E);
    const TypeParams tp(0, half);
    const PolyFamily vs = construct_vstar(kt, tp);
    CHECK(vs.at(I00) == BivarPoly(1));
    CHECK(vs.at(I10) == BivarPoly::x());
    CHECK(vs.at(I01) == BivarPoly::y());
    for (const auto& [mn, p] : vs) CHECK(poly_is_compatible(p, tp) == mn);
    CHECK_FALSE(vstar_failure(vs, c.E, 16));
    const DualAdjacency da = dual_adjacency(c.s, c.E, kt, 0);
    CHECK(da.matrices.at(I00) == Matrix::identity(16));
    for (const auto& [mn, A] : da.matrices) CHECK((A * A).trace() == 16 * c.sp.multiplicity(mn));
    CHECK_FALSE(dual_polynomial_failure(da, vs));
    const DualAdjacency da5 = dual_adjacency(c.s, c.E, kt, 5);
    CHECK_FALSE(dual_polynomial_failure(da5, vs));
}

TEST_CASE("bivariate Krawtchouk values are the eigenvalues of the symmetrization") {
    const Computed c = compute(symmetrize(cycle4(), 2), symmetrized_dual_labeler(SrgParams::from_eigenvalues(2, 0, -2), 2));
    const PolyFamily v = construct_vij(c.t, TypeParams(half, half));
    for (const auto& ij : c.sp.dual_domain)
        for (const auto& mn : c.sp.domain) {
            const Rational direct = v.at(mn)(c.sp.theta(ij), c.sp.mu(ij));
            CHECK(direct == c.sp.p(mn, ij));
            CHECK(biv_krawtchouk_values(mn.i, mn.j, ij.i, ij.j, 2, 0, -2, 2) == direct);
        }
}

TEST_CASE("spectral failures are typed") {
    // C5 has eigenvalues (-1 +- sqrt 5)/2.
    std::vector<int> pts{0, 1, 2, 3, 4};
    const VertexScheme c5 = scheme_from_relations(pts, [](int x, int y) {
        const int d = std::min((x - y + 5) % 5, (y - x + 5) % 5);
        return d == 0 ? I00 : d == 1 ? I10 : I01;
    });
    CHECK_THROWS_AS(first_eigenmatrix(intersection_numbers(c5)), NonRationalSpectrum);
    // The labeler refusing a row.
    CHECK_THROWS(first_eigenmatrix(intersection_numbers(cycle4()), [](const Domain&, std::span<const Rational>) {
        return std::optional<Index>{};
    }));
}

TEST_CASE("relabel_dual") {
    const Computed c = compute(cycle4());
    const Spectrum r = relabel_dual(c.sp, {{I10, I01}, {I01, I10}});
    CHECK(r.p(I10, I01) == c.sp.p(I10, I10));
    CHECK(r.multiplicity(I01) == 2);
}
