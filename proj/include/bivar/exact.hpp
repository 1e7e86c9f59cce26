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

#ifndef BIVAR_EXACT_HPP
#define BIVAR_EXACT_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bivar {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" into a rational in lowest terms.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

/// base^e for any integer e (base must be nonzero when e < 0).
Rational power(const Rational& base, long e);

bool is_integer(const Rational& r);

/**
 * @brief Exponent pair or class label (i,j).
 *
 * The built-in comparison is plain lexicographic and only serves as a map key order;
 * use deglex_less for the order on domains.
 */
struct Index {
    int i = 0;
    int j = 0;
    constexpr auto operator<=>(const Index&) const = default;
    constexpr Index operator+(const Index& o) const { return {i + o.i, j + o.j}; }
};

/// Strict deg-lex: total degree first, then the y-exponent.
constexpr bool deglex_less(const Index& a, const Index& b) {
    const int da = a.i + a.j;
    const int db = b.i + b.j;
    return da < db || (da == db && a.j < b.j);
}

struct DegLexLess {
    constexpr bool operator()(const Index& a, const Index& b) const { return deglex_less(a, b); }
};

/// "i,j"
std::string to_string(const Index& e);
Index parse_index(std::string_view text);
std::ostream& operator<<(std::ostream& os, const Index& e);

class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix ones(std::size_t rows, std::size_t cols);
    static Matrix diagonal(std::span<const Rational> d);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rational> data() const noexcept { return data_; }
    std::vector<Rational> row(std::size_t r) const;
    std::vector<Rational> col(std::size_t c) const;

    Matrix transpose() const;
    bool is_zero() const;
    bool is_symmetric() const;
    Rational trace() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rational& s);

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Matrix a, const Rational& s);
Matrix operator*(const Rational& s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<Rational> operator*(const Matrix& a, std::span<const Rational> x);
std::ostream& operator<<(std::ostream& os, const Matrix& m);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix hadamard(const Matrix& a, const Matrix& b);

// Exact Gaussian elimination helpers.
std::size_t rank(const Matrix& m);
/// Columns form a basis of the right null space.
Matrix kernel(const Matrix& m);
/// Throws std::domain_error when singular.
Matrix inverse(const Matrix& m);
/// Monic characteristic polynomial, coefficients from degree 0 upwards.
std::vector<Rational> characteristic_polynomial(const Matrix& m);
/// Distinct rational eigenvalues with algebraic multiplicities; irrational roots are absent.
std::vector<std::pair<Rational, int>> rational_eigenvalues(const Matrix& m);

/**
 * @brief Sparse bivariate polynomial over the rationals.
 *
 * Terms are ordered by deg-lex so the last stored monomial is the degree.
 */
class BivarPoly {
  public:
    using Terms = std::map<Index, Rational, DegLexLess>;

    BivarPoly() = default;
    BivarPoly(const Rational& c);
    BivarPoly(long c) : BivarPoly(Rational(c)) {}

    static BivarPoly monomial(Index e, const Rational& c = 1);
    static BivarPoly x() { return monomial({1, 0}); }
    static BivarPoly y() { return monomial({0, 1}); }

    const Terms& terms() const noexcept { return terms_; }
    Rational coeff(Index e) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Deg-lex maximal monomial; throws on the zero polynomial.
    Index degree() const;
    std::size_t total_degree() const;

    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);
    BivarPoly& operator*=(const Rational& s);
    BivarPoly& operator/=(const Rational& s);

    /// Point evaluation.
    Rational operator()(const Rational& x, const Rational& y) const;

    friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

  private:
    void add_term(Index e, const Rational& c);
    Terms terms_;
};

BivarPoly operator+(BivarPoly a, const BivarPoly& b);
BivarPoly operator-(BivarPoly a, const BivarPoly& b);
BivarPoly operator-(BivarPoly a);
BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
BivarPoly operator*(BivarPoly a, const Rational& s);
BivarPoly operator*(const Rational& s, BivarPoly a);
BivarPoly operator/(BivarPoly a, const Rational& s);
std::ostream& operator<<(std::ostream& os, const BivarPoly& p);

/**
 * @brief Evaluates p at square matrices X, Y as sum of coeff * X^m Y^n.
 *
 * With @p check_commuting the product XY is compared against YX first and
 * std::invalid_argument is thrown when they differ.
 */
Matrix poly_eval(const BivarPoly& p, const Matrix& X, const Matrix& Y, bool check_commuting = false);

/// Same as poly_eval with the Hadamard product; X^0 = Y^0 = all-ones.
Matrix poly_eval_hadamard(const BivarPoly& p, const Matrix& X, const Matrix& Y);

}  // namespace bivar

#endif
