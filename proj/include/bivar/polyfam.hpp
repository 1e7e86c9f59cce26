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

#ifndef BIVAR_POLYFAM_HPP
#define BIVAR_POLYFAM_HPP

#include "bivar/exact.hpp"

namespace bivar {

/// x(x-1)...(x-k+1)/k!, so C(x,k) = 0 for 0 <= x < k and signed for negative x.
Rational binom(long x, long k);

/// K_i(x) = sum_l (-1)^l (p-1)^(i-l) C(x,l) C(N-x,i-l)
Rational krawtchouk(long i, long x, long N, const Rational& p);

/// E_i(x) = sum_l (-1)^l C(x,l) C(p-x,i-l) C(N-p-x,i-l)
Rational eberlein(long i, long x, long N, long p);

/// p_ij(x,y) = (r-1)^j K_i(x, k-j, r-1) E_j(y-x, n-x, k-x) for J_r(n,k).
Rational nbj_eigenvalue(long i, long j, long x, long y, long r, long n, long k);

/// [n]_q = (q^n - 1)/(q - 1), and n at q = 1. Negative n allowed.
Rational qnumber(long n, const Rational& q);

/**
 * Gaussian binomial [a b]_q. Zero when b < 0, or when a >= 0 and b > a. A negative
 * top argument uses prod_{t<b} (q^(a-t) - 1)/(q^(t+1) - 1). At q = 1 this is binom(a,b).
 */
Rational qbinom(long a, long b, const Rational& q);

/// K_i(j, L; q; n) = sum_k (-1)^(i-k) q^(kL + C(i-k,2)) [j-k, j-i]_q [j-n, k]_q
Rational q_krawtchouk(long i, long j, long L, const Rational& q, long n);

/// Q_i(k, j; q; m) = sum_l (-1)^(i-l) q^(lm + C(i-l,2)) [j-l, j-i]_q [j-m, l]_q [k-j+l-m, l]_q
Rational q_hahn(long i, long k, long j, const Rational& q, long m);

/// p_ij(m,n) = q^(jL) K_i(d-j, L; q; n) Q_j(D-n, d-n; q; m) for the attenuated space scheme.
Rational attenuated_eigenvalue(long i, long j, long m, long n, const Rational& q, long d, long D, long L);
/// -[d]_q + q^L [d-n]_q
Rational attenuated_theta(long m, long n, const Rational& q, long d, long D, long L);
/// q^L (q^m [d-m-n]_q [D-d+1-m]_q - [d-n]_q)
Rational attenuated_mu(long m, long n, const Rational& q, long d, long D, long L);

/**
 * Coefficient of x1^m x2^n in
 * (1 + k x1 + (kb/c) x2)^(N-i-j) (1 + theta x1 - (theta+1) x2)^i (1 + tau x1 - (tau+1) x2)^j
 * with b = -(theta+1)(tau+1), c = k + theta tau. Throws std::domain_error when c = 0.
 */
Rational biv_krawtchouk_values(long m, long n, long i, long j, const Rational& k, const Rational& theta, const Rational& tau,
                               long N);

struct SrgTriple {
    Rational k, b, c;
    friend bool operator==(const SrgTriple&, const SrgTriple&) = default;
};

/// Dual parameters (k*, b*, c*) of the strongly regular graph with eigenvalues k > theta > tau.
SrgTriple dual_srg_params(const Rational& k, const Rational& theta, const Rational& tau);

struct SrgEigen {
    Rational k, theta, tau;
    friend bool operator==(const SrgEigen&, const SrgEigen&) = default;
};

/// (k*, theta*, tau*) with theta* = k* theta / k and tau* = -k* (theta+1) / (v-k-1).
SrgEigen dual_srg_eigen(const Rational& k, const Rational& theta, const Rational& tau);

}  // namespace bivar

#endif
