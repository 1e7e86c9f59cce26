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
#include "bivar/scheme.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace bivar;

namespace {

const Index I00{0, 0}, I10{1, 0}, I01{0, 1};

VertexScheme path3() {
    std::vector<int> pts{0, 1, 2};
    return scheme_from_relations(pts, [](int x, int y) {
        const int d = std::abs(x - y);
        return d == 0 ? I00 : d == 1 ? I10 : I01;
    });
}

void check_row_sums(const IntersectionTensor& t) {
    for (const auto& a : t.domain())
        for (const auto& b : t.domain()) {
            Rational s = 0;
            for (const auto& c : t.domain()) s += t.p(a, b, c) * t.valence(c);
            CHECK(s == t.valence(a) * t.valence(b));
        }
}

}  // namespace

TEST_CASE("bit matrices") {
    const Matrix m{{0, 1, 1}, {1, 0, 0}, {1, 0, 1}};
    const BitMatrix b = BitMatrix::from_matrix(m);
    CHECK(b.to_matrix() == m);
    CHECK(b.count() == 5);
    CHECK(b.row_count(0) == 2);
    CHECK(b.is_symmetric());
    CHECK(b.transpose() == b);
    CHECK_THROWS_AS(BitMatrix::from_matrix(Matrix{{0, 2}, {1, 0}}), std::invalid_argument);
    BitMatrix wide(130);
    wide.set(0, 129);
    wide.set(2, 64);
    CHECK(wide.test(0, 129));
    CHECK_FALSE(wide.is_symmetric());
    CHECK(wide.transpose().test(129, 0));
}

TEST_CASE("axioms") {
    const AxiomReport trivial = verify_axioms(complete_scheme(3));
    CHECK(trivial.passed());
    CHECK(verify_axioms(nonbinary_johnson(3, 4, 2)).passed());

    const VertexScheme overlap(Domain({I00, I10}), {BitMatrix::from_matrix(Matrix::identity(3)),
                                                    BitMatrix::from_matrix(Matrix::ones(3, 3))});
    const AxiomReport r = verify_axioms(overlap);
    CHECK_FALSE(r.passed());
    CHECK(r["i"].passed);
    CHECK_FALSE(r["ii"].passed);
    CHECK_FALSE(r["ii"].witness.empty());

    const AxiomReport p3 = verify_axioms(path3());
    CHECK(p3["i"].passed);
    CHECK(p3["ii"].passed);
    CHECK(p3["iii"].passed);
    CHECK_FALSE(p3["iv"].passed);

    Matrix asym = Matrix::ones(3, 3) - Matrix::identity(3);
    Matrix a1(3, 3), a2(3, 3);
    a1(0, 1) = a1(1, 2) = a1(2, 0) = 1;
    a2 = asym - a1;
    const VertexScheme directed(Domain({I00, I10, I01}), {BitMatrix::from_matrix(Matrix::identity(3)), BitMatrix::from_matrix(a1),
                                                          BitMatrix::from_matrix(a2)});
    CHECK_FALSE(verify_axioms(directed)["iii"].passed);

    const VertexScheme noid(Domain({I00, I10}),
                            {BitMatrix::from_matrix(Matrix{{1, 0}, {0, 0}}), BitMatrix::from_matrix(Matrix{{0, 1}, {1, 1}})});
    CHECK_FALSE(verify_axioms(noid)["i"].passed);
}

TEST_CASE("scheme_from_relations") {
    const VertexScheme c4 = cycle4();
    CHECK(c4.domain() == Domain({I00, I10, I01}));
    CHECK(verify_axioms(c4).passed());
    const IntersectionTensor h = intersection_numbers(hamming2(4));
    CHECK(h.valence(I10) == 6);
    CHECK(h.p(I10, I10, I10) == 6 - 1 - 3);
    CHECK(h.p(I10, I01, I10) == 3);
    CHECK(h.p(I10, I10, I01) == 2);
    const VertexScheme one = complete_scheme(1);
    CHECK(one.class_count() == 1);
    CHECK(verify_axioms(one).passed());
    std::vector<int> pts{0, 1};
    CHECK_THROWS(scheme_from_relations(pts, [](int x, int y) { return x < y ? I10 : x == y ? I00 : I01; }));
    CHECK_THROWS(scheme_from_relations(pts, [](int x, int y) { return x == y && x == 0 ? I00 : I10; }));
}

TEST_CASE("intersection numbers agree with direct counting") {
    const VertexScheme j = nonbinary_johnson(3, 4, 2);
    const IntersectionTensor t = intersection_numbers(j);
    CHECK(t.vertex_sourced());
    CHECK(t.full());
    CHECK(t.valence(I10) == 2);
    CHECK(t.valence(I01) == 8);
    CHECK(*t.vertex_count() == 24);
    const auto counts = oracle::count_intersections(
        j.vertex_count(), [&](std::size_t x, std::size_t y) { return *j.relation(x, y); }, j.domain().points(), 24);
    REQUIRE(counts);
    for (const auto& a : t.domain())
        for (const auto& b : t.domain())
            for (const auto& c : t.domain()) {
                const auto it = counts->find({a, b, c});
                CHECK(t.p(a, b, c) == (it == counts->end() ? 0 : it->second));
            }
    for (const auto& a : t.domain())
        for (const auto& c : t.domain()) CHECK(t.p(a, I00, c) == (a == c ? 1 : 0));
    check_row_sums(t);
    CHECK_FALSE(homomorphism_failure(t));

    Config strict;
    strict.strict_intersection = true;
    CHECK(intersection_numbers(j, strict) == t);
    CHECK_THROWS_AS(intersection_numbers(path3()), InconsistentScheme);
}

TEST_CASE("L-matrices") {
    const IntersectionTensor t = intersection_numbers(petersen());
    CHECK(t.lmatrix(I00) == Matrix::identity(3));
    CHECK(t.lmatrix(I10) == Matrix{{0, 3, 0}, {1, 0, 2}, {0, 1, 2}});
    CHECK(lmatrix(t, I10) == t.lmatrix(I10));
    const IntersectionTensor partial(Domain({I00, I10, I01}), {{I10, t.lmatrix(I10)}});
    CHECK_FALSE(partial.full());
    CHECK_THROWS_AS(partial.lmatrix(I01), std::out_of_range);
    CHECK(partial.p(I01, I10, I10) == t.p(I10, I01, I10));
    CHECK(partial.p(I01, I10, I10) == 2);
    CHECK_THROWS_AS(IntersectionTensor(Domain({I00, I10}), {{I10, Matrix{{1, 0}, {0, 1}}}}), std::invalid_argument);

    const IntersectionTensor c24 = cell24_numbered(Rational(1, 2), 2);
    CHECK(c24.lmatrix({2, 0})(0, 2) == 6);
}

TEST_CASE("direct product intersection numbers factor") {
    const VertexScheme c4 = cycle4(), k3 = complete_scheme(3);
    const VertexScheme prod = direct_product(c4, k3);
    CHECK(prod.vertex_count() == 12);
    CHECK(verify_axioms(prod).passed());
    const IntersectionTensor t = intersection_numbers(prod), a = intersection_numbers(c4), b = intersection_numbers(k3);
    const std::vector<Index> ca{I00, I10, I01}, cb{I00, I10};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int m = 0; m < 3; ++m)
                for (int j = 0; j < 2; ++j)
                    for (int l = 0; l < 2; ++l)
                        for (int n = 0; n < 2; ++n)
                            CHECK(t.p({i, j}, {k, l}, {m, n}) == a.p(ca[i], ca[k], ca[m]) * b.p(cb[j], cb[l], cb[n]));
}

TEST_CASE("relabel") {
    const VertexScheme c4 = cycle4();
    const VertexScheme swapped = relabel(c4, {{I10, I01}, {I01, I10}});
    CHECK(swapped.bits(I10) == c4.bits(I01));
    CHECK_THROWS(relabel(c4, {{I00, I10}, {I10, I00}}));
    CHECK_THROWS(relabel(c4, {{I10, I01}}));
    const IntersectionTensor t = intersection_numbers(c4);
    const IntersectionTensor ts = relabel(t, {{I10, I01}, {I01, I10}});
    CHECK(ts == intersection_numbers(swapped));
}
