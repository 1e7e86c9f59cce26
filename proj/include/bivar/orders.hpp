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

#ifndef BIVAR_ORDERS_HPP
#define BIVAR_ORDERS_HPP

#include "bivar/exact.hpp"

#include <optional>
#include <vector>

namespace bivar {

/// Parameters (alpha, beta) of the partial order; 0 <= alpha <= 1 and 0 <= beta < 1.
class TypeParams {
  public:
    TypeParams() = default;
    TypeParams(Rational alpha, Rational beta);

    const Rational& alpha() const noexcept { return alpha_; }
    const Rational& beta() const noexcept { return beta_; }

    friend bool operator==(const TypeParams&, const TypeParams&) = default;

  private:
    Rational alpha_ = 0;
    Rational beta_ = 0;
};

std::ostream& operator<<(std::ostream& os, const TypeParams& t);

/// (m,n) <= (i,j) in deg-lex.
bool deglex_leq(const Index& a, const Index& b);

/// (m,n) precedes-or-equals (i,j) for the (alpha,beta) order.
bool ab_leq(const TypeParams& t, const Index& a, const Index& b);

/// Degree of p when every monomial is dominated by it, empty otherwise. Throws on zero.
std::optional<Index> poly_is_compatible(const BivarPoly& p, const TypeParams& t);

/**
 * @brief Finite subset of N^2 containing (0,0), kept sorted in deg-lex order.
 *
 * Positions in that order index the rows and columns of L-matrices.
 */
class Domain {
  public:
    Domain() : Domain(std::vector<Index>{{0, 0}}) {}
    explicit Domain(std::vector<Index> points);

    /// {(i,j) : i + j <= n}
    static Domain triangle(int n);

    const std::vector<Index>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool contains(const Index& e) const;
    /// Deg-lex position; throws std::out_of_range when absent.
    std::size_t position(const Index& e) const;
    std::optional<std::size_t> find(const Index& e) const;
    const Index& operator[](std::size_t k) const { return points_[k]; }

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    friend bool operator==(const Domain&, const Domain&) = default;

  private:
    std::vector<Index> points_;
};

std::ostream& operator<<(std::ostream& os, const Domain& d);

struct DomainCheck {
    bool compatible = true;
    /// First violation found: ((i,j) in d, (m,n) below it but missing).
    std::optional<std::pair<Index, Index>> witness;
    std::vector<std::pair<Index, Index>> violations;
};

/**
 * Checks downward closure of d under the (alpha,beta) order. Points are visited from
 * the deg-lex largest down, and below each point the missing monomials in deg-lex order,
 * so the witness names the outermost offending point.
 */
DomainCheck domain_is_compatible(const Domain& d, const TypeParams& t);

}  // namespace bivar

#endif
