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
using oracle::choose;
using oracle::pw;

namespace {

Rational krawtchouk_oracle(long i, long x, long N, const Rational& p) {
    Rational s = 0;
    for (long l = 0; l <= i; ++l) {
        const Rational t = pw(p - 1, i - l) * choose(x, l) * choose(N - x, i - l);
        if (l % 2) {
            s -= t;
        } else {
            s += t;
        }
    }
    return s;
}

Rational eberlein_oracle(long i, long x, long N, long p) {
    Rational s = 0;
    for (long l = 0; l <= i; ++l) {
        const Rational t = choose(x, l) * choose(p - x, i - l) * choose(N - p - x, i - l);
        if (l % 2) {
            s -= t;
        } else {
            s += t;
        }
    }
    return s;
}

// q-binomial with possibly negative top, from the product formula.
Rational qchoose_any(long a, long b, const Rational& q) {
    if (b < 0) return 0;
    if (a >= 0) return oracle::qchoose(a, b, q);
    Rational r = 1;
    for (long t = 0; t < b; ++t) r *= (pw(q, a - t) - 1) / (pw(q, t + 1) - 1);
    return r;
}

Rational sign(long e) { return e % 2 ? Rational(-1) : Rational(1); }

}  // namespace

TEST_CASE("binomials") {
    CHECK(binom(4, 2) == 6);
    CHECK(binom(1, 3) == 0);
    CHECK(binom(-1, 2) == 1);
    CHECK(binom(5, -1) == 0);
    CHECK(binom(-3, 3) == -10);
}

TEST_CASE("Krawtchouk and Eberlein") {
    CHECK(krawtchouk(0, 3, 5, 3) == 1);
    CHECK(krawtchouk(1, 1, 2, 3) == 1);
    CHECK(krawtchouk(2, 0, 2, 3) == 4);
    CHECK(eberlein(0, 2, 5, 2) == 1);
    CHECK(eberlein(1, 0, 4, 2) == 4);
    CHECK(eberlein(1, 1, 4, 2) == 0);
    for (long i = 0; i <= 6; ++i)
        for (long x = 0; x <= 6; ++x) {
            for (long N = 0; N <= 6; ++N) {
                CHECK(krawtchouk(i, x, N, 3) == krawtchouk_oracle(i, x, N, 3));
                CHECK(krawtchouk(i, x, N, Rational(5, 2)) == krawtchouk_oracle(i, x, N, Rational(5, 2)));
                for (long p = 0; p <= N; ++p) CHECK(eberlein(i, x, N, p) == eberlein_oracle(i, x, N, p));
            }
        }
}

TEST_CASE("NBJ eigenvalues") {
    CHECK(nbj_eigenvalue(0, 0, 1, 2, 3, 4, 2) == 1);
    CHECK(nbj_eigenvalue(1, 0, 0, 0, 3, 4, 2) == 2);
    CHECK(nbj_eigenvalue(0, 1, 0, 0, 3, 4, 2) == 8);
    // The recurrences hold for the eigenvalues on the dual grid.
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {3, 2}, {5, 3}}) {
        const int r = 3;
        for (const auto& xy : nbj_dual_domain(n, k)) {
            auto ev = [&](const Index& ij) { return nbj_eigenvalue(ij.i, ij.j, xy.i, xy.j, r, n, k); };
            const auto dom = oracle::nbj_domain(n, k);
            for (int i = 0; i <= k; ++i)
                for (int j = 0; j <= std::min(k, n - k); ++j) {
                    if (!dom({i, j})) continue;
                    for (const Index& left : {Index{1, 0}, Index{0, 1}}) {
                        Rational rhs = 0;
                        for (const auto& [c, coef] : oracle::nbj(left, r, n, k, i, j)) rhs += coef * ev(c);
                        CHECK(ev(left) * ev({i, j}) == rhs);
                    }
                }
        }
    }
}

TEST_CASE("q-numbers and q-binomials") {
    CHECK(qnumber(3, 2) == 7);
    CHECK(qnumber(0, 5) == 0);
    CHECK(qnumber(4, 1) == 4);
    CHECK(qnumber(-1, 2) == Rational(-1, 2));
    CHECK(qbinom(5, 0, 3) == 1);
    CHECK(qbinom(4, 2, 2) == 35);
    CHECK(qbinom(2, 3, 2) == 0);
    CHECK(qbinom(2, -1, 2) == 0);
    for (long a = 0; a <= 8; ++a)
        for (long b = 0; b <= a; ++b) {
            CHECK(qbinom(a, b, 1) == binom(a, b));
            CHECK(qbinom(a, b, 3) == oracle::qchoose(a, b, 3));
        }
    for (long n = 0; n <= 8; ++n) CHECK(qnumber(n, 3) == oracle::qint(n, 3));
    CHECK(qbinom(-2, 2, 2) == qchoose_any(-2, 2, 2));
}

TEST_CASE("q-Krawtchouk and q-Hahn sums") {
    const Rational q = 2;
    CHECK(q_krawtchouk(0, 3, 2, q, 1) == 1);
    CHECK(q_hahn(0, 4, 2, q, 1) == 1);
    for (long i = 0; i <= 3; ++i)
        for (long j = 0; j <= 4; ++j)
            for (long n = 0; n <= 3; ++n)
                for (long L = 0; L <= 3; ++L) {
                    Rational s = 0;
                    for (long k = 0; k <= i; ++k)
                        s += sign(i - k) * pw(q, k * L + (i - k) * (i - k - 1) / 2) * qchoose_any(j - k, j - i, q) *
                             qchoose_any(j - n, k, q);
                    CHECK(q_krawtchouk(i, j, L, q, n) == s);
                }
    for (long i = 0; i <= 3; ++i)
        for (long k = 0; k <= 5; ++k)
            for (long j = 0; j <= 4; ++j)
                for (long m = 0; m <= 3; ++m) {
                    Rational s = 0;
                    for (long l = 0; l <= i; ++l)
                        s += sign(i - l) * pw(q, l * m + (i - l) * (i - l - 1) / 2) * qchoose_any(j - l, j - i, q) *
                             qchoose_any(j - m, l, q) * qchoose_any(k - j + l - m, l, q);
                    CHECK(q_hahn(i, k, j, q, m) == s);
                }
}

TEST_CASE("attenuated eigenvalues") {
    for (const AttenuatedParams& p : std::vector<AttenuatedParams>{{2, 2, 5, 2}, {3, 2, 5, 2}, {2, 3, 6, 3}}) {
        const Rational q(p.q);
        const Domain d = attenuated_domain(p);
        for (const auto& mn : d) {
            CHECK(attenuated_eigenvalue(0, 0, mn.i, mn.j, q, p.d, p.D, p.L) == 1);
            CHECK(attenuated_eigenvalue(1, 0, mn.i, mn.j, q, p.d, p.D, p.L) == attenuated_theta(mn.i, mn.j, q, p.d, p.D, p.L));
            CHECK(attenuated_eigenvalue(0, 1, mn.i, mn.j, q, p.d, p.D, p.L) == attenuated_mu(mn.i, mn.j, q, p.d, p.D, p.L));
            CHECK(attenuated_theta(mn.i, mn.j, q, p.d, p.D, p.L) ==
                  -oracle::qint(p.d, q) + pw(q, p.L) * oracle::qint(p.d - mn.j, q));
        }
        // At the trivial point the eigenvalues are the valences of the rows.
        const IntersectionTensor t = attenuated_rows(p);
        CHECK(attenuated_eigenvalue(1, 0, 0, 0, q, p.d, p.D, p.L) == t.p({1, 0}, {1, 0}, {0, 0}));
        CHECK(attenuated_eigenvalue(0, 1, 0, 0, q, p.d, p.D, p.L) == t.p({0, 1}, {0, 1}, {0, 0}));
    }
}

TEST_CASE("bivariate Krawtchouk values") {
    CHECK(biv_krawtchouk_values(0, 0, 1, 1, 2, 0, -2, 2) == 1);
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j)
            CHECK(biv_krawtchouk_values(1, 0, i, j, 3, 1, -2, 3) == (3 - i - j) * 3 + i * 1 + j * (-2));
    CHECK_THROWS_AS(biv_krawtchouk_values(0, 0, 0, 0, 1, 1, -1, 2), std::domain_error);
}

TEST_CASE("dual SRG parameters") {
    CHECK(dual_srg_params(2, 0, -2) == SrgTriple{2, 1, 2});
    CHECK(dual_srg_params(3, 1, -2) == SrgTriple{5, Rational(16, 9), Rational(20, 9)});
    const SrgEigen e = dual_srg_eigen(3, 1, -2);
    CHECK(e == SrgEigen{5, Rational(5, 3), Rational(-5, 3)});
    // The same numbers from the Krein parameters of the eigenmatrix.
    for (const auto& [k, th, ta] : std::vector<std::tuple<long, long, long>>{{3, 1, -2}, {2, 0, -2}, {4, 1, -2}, {6, 2, -2}, {5, 1, -3}}) {
        const SrgParams sp = SrgParams::from_eigenvalues(k, th, ta);
        const Rational v = sp.v();
        const Matrix P = oracle::srg_eigenmatrix(k, th, ta, v);
        const auto [mt, ms] = oracle::srg_multiplicities(k, th, ta, v);
        const std::vector<Rational> m{1, mt, ms}, val{1, Rational(k), v - k - 1};
        const SrgTriple d = dual_srg_params(k, th, ta);
        CHECK(d.k == oracle::krein(P, m, val, v, 1, 1, 0));
        CHECK(d.b == oracle::krein(P, m, val, v, 1, 2, 1));
        CHECK(d.c == oracle::krein(P, m, val, v, 1, 1, 2));
        const SrgEigen de = dual_srg_eigen(k, th, ta);
        const SrgTriple back = dual_srg_params(de.k, de.theta, de.tau);
        CHECK(back == SrgTriple{Rational(k), sp.b, sp.c});
    }
    CHECK_THROWS_AS(dual_srg_params(2, 1, 1), std::domain_error);
}
