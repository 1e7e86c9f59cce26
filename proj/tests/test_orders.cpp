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

#include <doctest.h>

using namespace bivar;

namespace {

std::vector<TypeParams> grid() {
    std::vector<TypeParams> out;
    const std::vector<Rational> alphas{0, Rational(1, 4), Rational(1, 2), Rational(3, 4), 1};
    const std::vector<Rational> betas{0, Rational(1, 5), Rational(1, 3), Rational(1, 2), Rational(4, 5)};
    for (const auto& a : alphas)
        for (const auto& b : betas) out.emplace_back(a, b);
    return out;
}

std::vector<Index> points(int max) {
    std::vector<Index> out;
    for (int i = 0; i <= max; ++i)
        for (int j = 0; j <= max; ++j) out.push_back({i, j});
    return out;
}

}  // namespace

TEST_CASE("type parameters are validated") {
    CHECK_NOTHROW(TypeParams(1, 0));
    CHECK_THROWS_AS(TypeParams(Rational(-1, 2), 0), std::invalid_argument);
    CHECK_THROWS_AS(TypeParams(Rational(3, 2), 0), std::invalid_argument);
    CHECK_THROWS_AS(TypeParams(0, 1), std::invalid_argument);
}

TEST_CASE("deg-lex") {
    CHECK_FALSE(deglex_leq({1, 2}, {2, 1}));
    CHECK(deglex_leq({2, 1}, {1, 2}));
    CHECK(deglex_leq({0, 0}, {0, 0}));
    CHECK(deglex_leq({5, 0}, {0, 6}));
}

TEST_CASE("(alpha,beta) order examples") {
    CHECK(ab_leq(TypeParams(1, 0), {3, 1}, {2, 4}));
    CHECK_FALSE(ab_leq(TypeParams(0, 0), {3, 1}, {2, 4}));
    for (const auto& t : grid()) CHECK(ab_leq(t, {2, 3}, {2, 3}));
    // Borderline equality: 1 + (1/2)*0 = 0 + (1/2)*2.
    CHECK(ab_leq(TypeParams(Rational(1, 2), 0), {1, 0}, {0, 2}));
}

TEST_CASE("order axioms on exponents up to 8 and a 5x5 grid of types") {
    const auto pts = points(8);
    for (const auto& t : grid()) {
        for (const auto& a : pts)
            for (const auto& b : pts) {
                const bool ab = ab_leq(t, a, b);
                if (ab) {
                    REQUIRE(deglex_leq(a, b));
                    REQUIRE(ab_leq(t, {a.i + 1, a.j}, {b.i + 1, b.j}));
                    REQUIRE(ab_leq(t, {a.i, a.j + 1}, {b.i, b.j + 1}));
                    if (a != b) REQUIRE_FALSE(ab_leq(t, b, a));
                }
            }
        for (const auto& a : pts)
            for (const auto& b : pts) {
                if (!ab_leq(t, a, b)) continue;
                for (const auto& c : pts)
                    if (ab_leq(t, b, c)) REQUIRE(ab_leq(t, a, c));
            }
    }
}

TEST_CASE("polynomial compatibility") {
    const BivarPoly x = BivarPoly::x(), y = BivarPoly::y();
    CHECK(poly_is_compatible(BivarPoly(1), TypeParams(0, 0)) == Index{0, 0});
    CHECK(poly_is_compatible(x * y / 3 - y, TypeParams(Rational(1, 2), 0)) == Index{1, 1});
    CHECK_FALSE(poly_is_compatible(x * x + y * y, TypeParams(0, 0)).has_value());
    CHECK_THROWS_AS(poly_is_compatible(BivarPoly(), TypeParams(0, 0)), std::invalid_argument);
    // y^2 has x under (1,0) only: (1,0) <= (0,2) needs 1 <= 2 alpha.
    CHECK(poly_is_compatible(y * y + x, TypeParams(1, 0)) == Index{0, 2});
    CHECK_FALSE(poly_is_compatible(y * y + x, TypeParams(Rational(1, 3), 0)).has_value());
}

TEST_CASE("domains") {
    const Domain t2 = Domain::triangle(2);
    CHECK(t2.size() == 6);
    CHECK(t2[0] == Index{0, 0});
    CHECK(t2[3] == Index{2, 0});
    CHECK(t2[4] == Index{1, 1});
    CHECK(t2.position({0, 2}) == 5);
    CHECK_THROWS_AS(t2.position({3, 0}), std::out_of_range);
    CHECK_THROWS_AS(Domain({{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Domain({{0, 0}, {1, 0}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("domain compatibility") {
    CHECK(domain_is_compatible(Domain::triangle(2), TypeParams(1, 0)).compatible);
    CHECK(domain_is_compatible(Domain({{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}}), TypeParams(1, 0)).compatible);
    const auto bad = domain_is_compatible(Domain({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}}), TypeParams(1, 0));
    CHECK_FALSE(bad.compatible);
    REQUIRE(bad.witness);
    CHECK(bad.witness->first == Index{0, 2});
    CHECK(bad.witness->second == Index{2, 0});
    // A rectangle is compatible for (0,0) but not for (1,0).
    const Domain rect({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(domain_is_compatible(rect, TypeParams(0, 0)).compatible);
    CHECK_FALSE(domain_is_compatible(rect, TypeParams(1, 0)).compatible);
    // Brute-force definition on every subset-closed triangle truncation.
    for (const auto& t : grid())
        for (int n = 1; n <= 4; ++n) {
            const Domain d = Domain::triangle(n);
            bool expect = true;
            for (const auto& a : d)
                for (const auto& b : points(n))
                    if (ab_leq(t, b, a) && !d.contains(b)) expect = false;
            CHECK(domain_is_compatible(d, t).compatible == expect);
        }
}
