/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nw/numeric.hpp"
#include "nw/poly.hpp"

namespace nw {

/// An element of the design universe [l].
using SetElement = std::uint64_t;

/// A family of n size-q subsets of [l], each stored as a strictly
/// increasing list. Arbitrary families are representable; families built
/// by build_refined_nw additionally have l = q^2 and each set is the graph
/// of a function GF(q) -> GF(q) under the encoding (j, v) -> j*q + v.
struct DesignFamily {
    std::uint32_t set_size = 0;                 ///< q
    SetElement universe_size = 0;               ///< l
    std::vector<std::vector<SetElement>> sets;  ///< n sorted sets

    std::size_t size() const { return sets.size(); }
};

/// Exact overlap statistics of a family, as produced by verify().
///
/// prefix_sums[i] is sum_{j<i} 2^|S_i n S_j| (so prefix_sums[0] == 0).
/// rho_standard is 2^max_overlap; the weak-design parameters are the two
/// normalizations of the prefix sums used in the literature:
/// rho_weak_n = max_i prefix_sums[i] / n and
/// rho_weak_prefix = max_i prefix_sums[i] / (i+1). Neither bound implies
/// the other, so both are reported. All values are exact.
struct RhoReport {
    std::vector<BigCount> prefix_sums;
    unsigned max_overlap = 0;
    BigCount rho_standard;
    Rational rho_weak_n;
    Rational rho_weak_prefix;
};

/// The refined Nisan-Wigderson family over [q^2]: set i is the graph
/// {j*q + p_i(j) : j in GF(q)} of the i-th indexed polynomial
/// (poly_from_index). Deterministic. Throws TooManySets for n > q^q and
/// InvalidParameter for n == 0.
DesignFamily build_refined_nw(const FieldSpec& field, std::uint64_t n);

/// |a n b| for strictly increasing ranges, by sorted merge.
unsigned intersection_size(std::span<const SetElement> a,
                           std::span<const SetElement> b);

/// Exact overlap report for an arbitrary family by the O(n^2) pairwise
/// reference path. Validates the family first and throws MalformedDesign
/// on size/range/sortedness violations.
RhoReport verify(const DesignFamily& family);

/// Closed form of prefix_sums[i] + 1 for the refined family (the j <= i
/// sum, i.e. including the 2^0 self term), computed from
/// lambda_sum_closed_form without building any sets. The base-q digits of
/// i+1 are taken by exact integer division. Throws IndexTooLarge for
/// i >= q^q.
BigCount prefix_overlap_closed_form(const FieldSpec& field, std::uint64_t i);

/// The proven upper bound (1 + 1/q)^q on rho_weak_prefix of the refined
/// family, exactly. Strictly below e for every q.
Rational rho_upper_bound(std::uint32_t q);

} // namespace nw
