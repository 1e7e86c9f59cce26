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

#ifndef BIVAR_BIVARIATE_P_HPP
#define BIVAR_BIVARIATE_P_HPP

#include "bivar/errors.hpp"
#include "bivar/exact.hpp"
#include "bivar/orders.hpp"
#include "bivar/scheme.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace bivar {

enum class Condition { cm1, cm2, cm3, cm4, domain };

std::string to_string(Condition c);

/**
 * @brief One failed condition.
 *
 * For cm1/cm2, @c at is (i,j) and @c term the successor whose coefficient vanished
 * (or (i,j) itself for the reverse coefficient). For cm3/cm4, @c term is the support
 * index (m,n) that is out of order. For domain, (@c at, @c term) is the witness pair.
 */
struct Violation {
    Condition condition;
    Index at;
    Index term;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct MetricVerdict {
    bool passed = true;
    std::vector<Violation> violations;
};

/// Decides whether the tensor is (alpha,beta)-metric on its domain; needs rows (1,0) and (0,1).
MetricVerdict metric_test(const IntersectionTensor& t, const TypeParams& tp);

struct TypeRegion {
    Rational alpha_lo = 0, alpha_hi = 1;
    Rational beta_lo = 0, beta_hi = 1;
    /// beta_hi is excluded when this is set (the box is [0,1)).
    bool beta_hi_open = true;
    bool feasible = true;
};

struct MinimalType {
    TypeRegion region;
    std::optional<TypeParams> canonical;
    /// Domain compatibility at the canonical point.
    DomainCheck domain;
    /// cm1/cm2 failures; these do not depend on (alpha,beta).
    std::vector<Violation> nonvanishing;
    /// The tensor is bivariate P of the canonical type.
    bool bivariate_p() const { return canonical && domain.compatible && nonvanishing.empty(); }
};

/// Smallest (alpha,beta) satisfying the support conditions, with the region they cut out.
MinimalType minimal_type(const IntersectionTensor& t);

/// {(m,n) : p_{left,at}^{mn} != 0}
std::set<Index, DegLexLess> recurrence_support(const IntersectionTensor& t, const Index& left, const Index& at);

using PolyFamily = std::map<Index, BivarPoly, DegLexLess>;

/**
 * Builds v_ij by induction on deg-lex: from the (1,0)-row at (i-1,j) when i >= 1 and
 * from the (0,1)-row at (0,j-1) otherwise. Throws std::domain_error on a vanishing
 * leading coefficient and VerificationFailure if a result is not compatible of degree (i,j).
 */
PolyFamily construct_vij(const IntersectionTensor& t, const TypeParams& tp);

/// Full tensor from a partial one: L_ij = v_ij(L10, L01).
IntersectionTensor complete_tensor(const IntersectionTensor& t, const PolyFamily& v);

struct Labeling {
    Domain domain;
    /// Old label to new label.
    std::map<Index, Index> relabel;
};

/**
 * @brief All labelings of the classes by domain points that pass metric_test at @p tp.
 *
 * The identity class keeps (0,0). Candidate domains are subsets of the triangle
 * {i+j <= #classes} closed under taking (i-1,j) and (i,j-1); class (i,j) is chosen from
 * the support of A10*A_{i-1,j} (A01*A_{0,j-1} when i = 0). Needs a full tensor.
 */
std::vector<Labeling> all_labelings(const IntersectionTensor& t, const std::optional<TypeParams>& tp, const Config& cfg = {});

/// First labeling passing metric_test at @p tp, if any.
std::optional<Labeling> labeling_search(const IntersectionTensor& t, const TypeParams& tp, const Config& cfg = {});

struct TypedLabeling {
    Labeling labeling;
    TypeParams type;
};

/// Labeling whose canonical minimal type is smallest (alpha first, then beta).
std::optional<TypedLabeling> minimal_type_search(const IntersectionTensor& t, const Config& cfg = {});

}  // namespace bivar

#endif
