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

#include "bivar/exact.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>

namespace bivar {

Rational parse_rational(std::string_view text) {
    auto digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!digits(num) || !digits(den)) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    Integer n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    if (text.front() == '-') n = -n;
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational power(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("zero to a negative power");
        return 1 / power(base, -e);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::string to_string(const Index& e) { return std::to_string(e.i) + "," + std::to_string(e.j); }

Index parse_index(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("not an index pair: '" + std::string(text) + "'");
    try {
        std::size_t p1 = 0, p2 = 0;
        const std::string a(text.substr(0, comma)), b(text.substr(comma + 1));
        const int i = std::stoi(a, &p1), j = std::stoi(b, &p2);
        if (p1 != a.size() || p2 != b.size() || i < 0 || j < 0) throw std::invalid_argument("");
        return {i, j};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("not an index pair: '" + std::string(text) + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const Index& e) { return os << '(' << e.i << ',' << e.j << ')'; }

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) : rows_(rows.size()) {
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::ones(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    std::fill(m.data_.begin(), m.data_.end(), Rational(1));
    return m;
}

Matrix Matrix::diagonal(std::span<const Rational> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

std::vector<Rational> Matrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_), data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Rational> Matrix::col(std::size_t c) const {
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool Matrix::is_symmetric() const {
    if (!square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
}

Rational Matrix::trace() const {
    if (!square()) throw std::invalid_argument("trace of a non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch in +");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch in -");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
Matrix operator*(const Rational& s, Matrix a) { return a *= s; }

namespace {

Integer common_denominator(std::span<const Rational> xs) {
    Integer l = 1;
    for (const auto& x : xs)
        if (x.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

// Numerators after scaling by the common denominator; also returns the largest magnitude.
std::vector<Integer> scaled(std::span<const Rational> xs, const Integer& den, Integer& max_abs) {
    std::vector<Integer> out(xs.size());
    max_abs = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (sgn(xs[k]) == 0) continue;
        out[k] = xs[k].get_num() * (den / xs[k].get_den());
        if (abs(out[k]) > max_abs) max_abs = abs(out[k]);
    }
    return out;
}

}  // namespace

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in *");
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    const Integer da = common_denominator(a.data()), db = common_denominator(b.data());
    Integer ma, mb;
    const auto A = scaled(a.data(), da, ma);
    const auto B = scaled(b.data(), db, mb);
    const Integer den = da * db;
    Matrix out(n, m);
    const Integer bound = ma * mb * Integer(static_cast<unsigned long>(k + 1));
    if (bound < (Integer(1) << 62)) {
        std::vector<std::int64_t> a64(A.size()), b64(B.size()), c64(n * m, 0);
        for (std::size_t t = 0; t < A.size(); ++t) a64[t] = A[t].get_si();
        for (std::size_t t = 0; t < B.size(); ++t) b64[t] = B[t].get_si();
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t* crow = c64.data() + i * m;
            for (std::size_t t = 0; t < k; ++t) {
                const std::int64_t x = a64[i * k + t];
                if (x == 0) continue;
                const std::int64_t* brow = b64.data() + t * m;
                for (std::size_t j = 0; j < m; ++j) crow[j] += x * brow[j];
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                const std::int64_t c = c64[i * m + j];
                if (c == 0) continue;
                Rational& r = out(i, j);
                mpz_set_si(r.get_num_mpz_t(), c);
                mpz_set(r.get_den_mpz_t(), den.get_mpz_t());
                r.canonicalize();
            }
        return out;
    }
    std::vector<Integer> C(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            const Integer& x = A[i * k + t];
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (sgn(B[t * m + j]) != 0) mpz_addmul(C[i * m + j].get_mpz_t(), x.get_mpz_t(), B[t * m + j].get_mpz_t());
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (sgn(C[i * m + j]) == 0) continue;
            out(i, j) = Rational(C[i * m + j], den);
            out(i, j).canonicalize();
        }
    return out;
}

std::vector<Rational> operator*(const Matrix& a, std::span<const Rational> x) {
    if (a.cols() != x.size()) throw std::invalid_argument("dimension mismatch in matrix-vector product");
    std::vector<Rational> y(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (sgn(a(r, c)) != 0 && sgn(x[c]) != 0) y[r] += a(r, c) * x[c];
    return y;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << "; ";
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    }
    return os << ']';
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (sgn(a(i, j)) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("dimension mismatch in Hadamard product");
    Matrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (sgn(a(r, c)) != 0 && sgn(b(r, c)) != 0) out(r, c) = a(r, c) * b(r, c);
    return out;
}

// ---------------------------------------------------------------- linear algebra

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
        const Rational inv = 1 / m(r, c);
        for (std::size_t k = c; k < m.cols(); ++k) m(r, k) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                if (sgn(m(r, k)) != 0) m(i, k) -= f * m(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    Matrix w = m;
    return rref(w).size();
}

Matrix kernel(const Matrix& m) {
    Matrix w = m;
    const auto pivots = rref(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix basis(m.cols(), m.cols() - pivots.size());
    std::size_t out = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        basis(f, out) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], out) = -w(r, f);
        ++out;
    }
    return basis;
}

Matrix inverse(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
    return inv;
}

std::vector<Rational> characteristic_polynomial(const Matrix& a) {
    if (!a.square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    // Faddeev-LeVerrier.
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Matrix M(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        M = a * M;
        for (std::size_t i = 0; i < n; ++i) M(i, i) += c[n - k + 1];
        c[n - k] = -(a * M).trace() / Rational(static_cast<long>(k));
    }
    return c;
}

namespace {

// Value at x and synthetic division by (t - x) of an integer polynomial.
Integer horner(const std::vector<Integer>& p, const Integer& x) {
    Integer acc = 0;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

std::vector<Integer> deflate(const std::vector<Integer>& p, const Integer& x) {
    std::vector<Integer> q(p.size() - 1);
    Integer acc = 0;
    for (std::size_t k = p.size(); k-- > 1;) {
        acc = acc * x + p[k];
        q[k - 1] = acc;
    }
    return q;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_eigenvalues(const Matrix& m) {
    // Scaling by the common denominator makes the characteristic polynomial monic over Z,
    // so every rational root is an integer bounded by the maximal absolute row sum.
    const Integer s = common_denominator(m.data());
    const Matrix b = m * Rational(s);
    const auto cp = characteristic_polynomial(b);
    std::vector<Integer> p;
    for (const auto& x : cp) {
        if (!is_integer(x)) throw std::logic_error("non-integral characteristic polynomial of an integer matrix");
        p.push_back(x.get_num());
    }
    std::vector<std::pair<Rational, int>> roots;
    auto take = [&](const Integer& x) {
        int mult = 0;
        while (p.size() > 1 && horner(p, x) == 0) {
            p = deflate(p, x);
            ++mult;
        }
        if (mult) roots.emplace_back(Rational(x) / s, mult);
    };
    take(0);
    Integer bound = 0;
    for (std::size_t r = 0; r < b.rows(); ++r) {
        Integer sum = 0;
        for (std::size_t c = 0; c < b.cols(); ++c) sum += abs(b(r, c).get_num());
        if (sum > bound) bound = sum;
    }
    for (Integer x = 1; x <= bound && p.size() > 1; ++x) {
        if (!mpz_divisible_p(p[0].get_mpz_t(), x.get_mpz_t())) continue;
        take(x);
        take(Integer(-x));
    }
    std::sort(roots.begin(), roots.end(), [](const auto& l, const auto& r) { return l.first > r.first; });
    return roots;
}

// ---------------------------------------------------------------- BivarPoly

BivarPoly::BivarPoly(const Rational& c) {
    if (sgn(c) != 0) terms_.emplace(Index{0, 0}, c);
}

BivarPoly BivarPoly::monomial(Index e, const Rational& c) {
    if (e.i < 0 || e.j < 0) throw std::invalid_argument("negative exponent");
    BivarPoly p;
    p.add_term(e, c);
    return p;
}

Rational BivarPoly::coeff(Index e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Index BivarPoly::degree() const {
    if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
    return terms_.rbegin()->first;
}

std::size_t BivarPoly::total_degree() const {
    const Index d = degree();
    return static_cast<std::size_t>(d.i + d.j);
}

void BivarPoly::add_term(Index e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

BivarPoly& BivarPoly::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

BivarPoly& BivarPoly::operator/=(const Rational& s) {
    if (sgn(s) == 0) throw std::domain_error("division of a polynomial by zero");
    for (auto& [e, c] : terms_) c /= s;
    return *this;
}

Rational BivarPoly::operator()(const Rational& x, const Rational& y) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) acc += c * power(x, e.i) * power(y, e.j);
    return acc;
}

BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
BivarPoly operator-(BivarPoly a) { return a *= Rational(-1); }
BivarPoly operator*(BivarPoly a, const Rational& s) { return a *= s; }
BivarPoly operator*(const Rational& s, BivarPoly a) { return a *= s; }
BivarPoly operator/(BivarPoly a, const Rational& s) { return a /= s; }

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly out;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) out += BivarPoly::monomial(ea + eb, ca * cb);
    return out;
}

std::ostream& operator<<(std::ostream& os, const BivarPoly& p) {
    if (p.is_zero()) return os << '0';
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        const bool constant = e.i == 0 && e.j == 0;
        bool wrote = false;
        if (mag != 1 || constant) {
            os << mag;
            wrote = true;
        }
        auto var = [&](char v, int k) {
            if (k == 0) return;
            os << (wrote ? "*" : "") << v;
            if (k > 1) os << '^' << k;
            wrote = true;
        };
        var('x', e.i);
        var('y', e.j);
    }
    return os;
}

namespace {

template <class Mul>
Matrix evaluate(const BivarPoly& p, const Matrix& X, const Matrix& Y, const Matrix& unit, Mul mul) {
    if (!X.square() || X.rows() != Y.rows() || X.cols() != Y.cols())
        throw std::invalid_argument("poly_eval needs square matrices of equal size");
    std::vector<Matrix> xp{unit}, yp{unit};
    auto pw = [&](std::vector<Matrix>& cache, const Matrix& base, int k) -> const Matrix& {
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.size() == 1 ? base : mul(cache.back(), base));
        return cache[static_cast<std::size_t>(k)];
    };
    Matrix acc(X.rows(), X.cols());
    for (const auto& [e, c] : p.terms()) {
        if (e.i == 0)
            acc += c * pw(yp, Y, e.j);
        else if (e.j == 0)
            acc += c * pw(xp, X, e.i);
        else
            acc += c * mul(pw(xp, X, e.i), pw(yp, Y, e.j));
    }
    return acc;
}

}  // namespace

Matrix poly_eval(const BivarPoly& p, const Matrix& X, const Matrix& Y, bool check_commuting) {
    if (check_commuting && X * Y != Y * X) throw std::invalid_argument("poly_eval: X and Y do not commute");
    return evaluate(p, X, Y, Matrix::identity(X.rows()), [](const Matrix& a, const Matrix& b) { return a * b; });
}

Matrix poly_eval_hadamard(const BivarPoly& p, const Matrix& X, const Matrix& Y) {
    return evaluate(p, X, Y, Matrix::ones(X.rows(), X.cols()), [](const Matrix& a, const Matrix& b) { return hadamard(a, b); });
}

}  // namespace bivar
