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

#include "bivar/polyfam.hpp"

#include <stdexcept>

namespace bivar {

Rational binom(long x, long k) {
    if (k < 0) return 0;
    if (x >= 0 && x < k) return 0;
    Rational r = 1;
    for (long t = 0; t < k; ++t) r = r * (x - t) / (t + 1);
    return r;
}

Rational krawtchouk(long i, long x, long N, const Rational& p) {
    Rational s = 0;
    for (long l = 0; l <= i; ++l) {
        const Rational term = power(p - 1, i - l) * binom(x, l) * binom(N - x, i - l);
        if (l % 2)
            s -= term;
        else
            s += term;
    }
    return s;
}

Rational eberlein(long i, long x, long N, long p) {
    Rational s = 0;
    for (long l = 0; l <= i; ++l) {
        const Rational term = binom(x, l) * binom(p - x, i - l) * binom(N - p - x, i - l);
        if (l % 2)
            s -= term;
        else
            s += term;
    }
    return s;
}

Rational nbj_eigenvalue(long i, long j, long x, long y, long r, long n, long k) {
    return power(Rational(r - 1), j) * krawtchouk(i, x, k - j, Rational(r - 1)) * eberlein(j, y - x, n - x, k - x);
}

Rational qnumber(long n, const Rational& q) {
    if (q == 1) return n;
    return (power(q, n) - 1) / (q - 1);
}

Rational qbinom(long a, long b, const Rational& q) {
    if (b < 0 || (a >= 0 && b > a)) return 0;
    if (q == 1) return binom(a, b);
    Rational r = 1;
    for (long t = 0; t < b; ++t) r *= (power(q, a - t) - 1) / (power(q, t + 1) - 1);
    return r;
}

namespace {

long choose2(long m) { return m * (m - 1) / 2; }

}  // namespace

Rational q_krawtchouk(long i, long j, long L, const Rational& q, long n) {
    Rational s = 0;
    for (long k = 0; k <= i; ++k) {
        const Rational term = power(q, k * L + choose2(i - k)) * qbinom(j - k, j - i, q) * qbinom(j - n, k, q);
        if ((i - k) % 2)
            s -= term;
        else
            s += term;
    }
    return s;
}

Rational q_hahn(long i, long k, long j, const Rational& q, long m) {
    Rational s = 0;
    for (long l = 0; l <= i; ++l) {
        const Rational term =
            power(q, l * m + choose2(i - l)) * qbinom(j - l, j - i, q) * qbinom(j - m, l, q) * qbinom(k - j + l - m, l, q);
        if ((i - l) % 2)
            s -= term;
        else
            s += term;
    }
    return s;
}

Rational attenuated_eigenvalue(long i, long j, long m, long n, const Rational& q, long d, long D, long L) {
    return power(q, j * L) * q_krawtchouk(i, d - j, L, q, n) * q_hahn(j, D - n, d - n, q, m);
}

Rational attenuated_theta(long, long n, const Rational& q, long d, long, long L) {
    return -qnumber(d, q) + power(q, L) * qnumber(d - n, q);
}

Rational attenuated_mu(long m, long n, const Rational& q, long d, long D, long L) {
    return power(q, L) * (power(q, m) * qnumber(d - m - n, q) * qnumber(D - d + 1 - m, q) - qnumber(d - n, q));
}

Rational biv_krawtchouk_values(long m, long n, long i, long j, const Rational& k, const Rational& theta, const Rational& tau,
                               long N) {
    const Rational b = -(theta + 1) * (tau + 1);
    const Rational c = k + theta * tau;
    if (sgn(c) == 0) throw std::domain_error("biv_krawtchouk_values: c = k + theta tau vanishes");
    if (i < 0 || j < 0 || i + j > N) throw std::invalid_argument("biv_krawtchouk_values: (i,j) outside the triangle");
    const BivarPoly x = BivarPoly::x(), y = BivarPoly::y();
    const BivarPoly f0 = BivarPoly(1) + k * x + (k * b / c) * y;
    const BivarPoly f1 = BivarPoly(1) + theta * x - (theta + 1) * y;
    const BivarPoly f2 = BivarPoly(1) + tau * x - (tau + 1) * y;
    BivarPoly g(1);
    for (long t = 0; t < N - i - j; ++t) g = g * f0;
    for (long t = 0; t < i; ++t) g = g * f1;
    for (long t = 0; t < j; ++t) g = g * f2;
    return g.coeff({static_cast<int>(m), static_cast<int>(n)});
}

SrgTriple dual_srg_params(const Rational& k, const Rational& theta, const Rational& tau) {
    const Rational den1 = (tau * theta + k) * (tau - theta);
    const Rational den2 = (tau - theta) * (tau - theta) * (tau * theta + k);
    if (sgn(den1) == 0 || sgn(den2) == 0) throw std::domain_error("dual_srg_params: degenerate denominator");
    const Rational ks = k * (tau + 1) * (k - tau) / den1;
    const Rational bs = -tau * (theta + 1) * (k - theta) * (k - theta) / den2;
    const Rational cs = tau * (tau + 1) * (k - tau) * (k - theta) / den2;
    return {ks, bs, cs};
}

SrgEigen dual_srg_eigen(const Rational& k, const Rational& theta, const Rational& tau) {
    const SrgTriple d = dual_srg_params(k, theta, tau);
    const Rational b = -(theta + 1) * (tau + 1);
    const Rational c = k + theta * tau;
    if (sgn(c) == 0 || sgn(k) == 0) throw std::domain_error("dual_srg_eigen: degenerate parameters");
    const Rational v = (k * (b + c) + c) / c;
    if (v - k - 1 == 0) throw std::domain_error("dual_srg_eigen: complete graph");
    return {d.k, d.k * theta / k, -d.k * (theta + 1) / (v - k - 1)};
}

}  // namespace bivar
