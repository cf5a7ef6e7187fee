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
#include <string>
#include <vector>

#include "nw/design.hpp"

namespace nw {

/// A weak design with overlap parameter 1, assembled from b+1 shifted
/// copies of a refined Nisan-Wigderson base family laid out over the
/// enlarged universe [l * (b+1)].
///
/// Block m holds the first sizes[m] sets of the base family, offset by
/// m*l, so sets from different blocks are disjoint by construction. The
/// schedule is non-increasing and sums to combined.size() = n'.
struct BlockDesign {
    DesignFamily base;
    unsigned last_block = 0;             ///< b; blocks are 0..b
    std::vector<std::uint64_t> sizes;    ///< per-block set counts n_0..n_b
    DesignFamily combined;               ///< n' sets over l' = l*(b+1)
    Rational rho_input;                  ///< measured rho_weak_n of base
};

/// Smallest b >= 0 with n * rho * (1 - 1/rho)^b <= q, evaluated in exact
/// rational arithmetic; the number of extra blocks after which the
/// geometric schedule fits the last block into q sets. Returns 0 when
/// rho == 1 and throws InvalidRho when rho < 1.
unsigned block_count(std::uint64_t n, std::uint32_t q, const Rational& rho);

/// Builds the base family, measures its rho_weak_n, and packs
/// n' = ceil(n * rho) sets greedily into blocks: a set goes into the
/// current block while its full overlap prefix sum (previous blocks
/// contribute 1 each, the current block contributes the base family's own
/// prefix sum) stays <= n'; otherwise a new block opens, restarting from
/// set 0. The result therefore satisfies the weak-design test with
/// parameter 1 -- every prefix sum <= n' -- by construction, and that is
/// re-checked with verify() before returning (InternalError if violated).
///
/// When the base already measures rho_weak_n <= 1 the base itself is
/// returned as the combined family with a single block.
BlockDesign build_block_design(const FieldSpec& field, std::uint64_t n);

/// Dense 0/1 view: one row per set, one column per universe element,
/// row i carrying exactly q ones at the positions listed in set i.
std::vector<std::string> to_matrix(const DesignFamily& family);

} // namespace nw
