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

#include "nw/block.hpp"

#include <string>

namespace nw {

unsigned block_count(std::uint64_t n, std::uint32_t q, const Rational& rho) {
    if (n == 0)
        throw InvalidParameter("set count n must be at least 1");
    if (q < 2)
        throw InvalidParameter("q must be at least 2");
    if (rho < 1)
        throw InvalidRho("rho must be at least 1, got " +
                         to_fraction_string(rho));
    if (rho == 1)
        return 0;
    // Smallest b with n * rho * (1 - 1/rho)^b <= q, by exact iteration.
    const Rational shrink = (rho - 1) / rho;
    Rational remaining = Rational{static_cast<unsigned long>(n)} * rho;
    unsigned b = 0;
    while (remaining > q) {
        remaining *= shrink;
        ++b;
    }
    return b;
}

BlockDesign build_block_design(const FieldSpec& field, std::uint64_t n) {
    BlockDesign design;
    design.base = build_refined_nw(field, n);
    const RhoReport base_report = verify(design.base);
    design.rho_input = base_report.rho_weak_n;

    if (design.rho_input <= 1) {
        design.last_block = 0;
        design.sizes = {n};
        design.combined = design.base;
        return design;
    }

    // Target count n' = ceil(n * rho). A set placed at local position c of
    // block m has total prefix sum P_m + base_prefix[c]: every set in an
    // earlier block is disjoint from it and contributes 2^0 = 1, and
    // within the block the overlap structure is the base family's own.
    // Greedy: extend the current block while that stays <= n', else open
    // the next block. The first set of a block always fits (P_m < n').
    const BigCount target = ceil_rational(
        design.rho_input * Rational{static_cast<unsigned long>(n)});
    if (!target.fits_ulong_p())
        throw InvalidParameter("n * rho does not fit a 64-bit set count");
    const std::uint64_t n_prime = static_cast<std::uint64_t>(target.get_ui());
    const BigCount budget{static_cast<unsigned long>(n_prime)};

    design.sizes.clear();
    std::uint64_t placed = 0;
    std::uint64_t current = 0;  // sets in the open block
    while (placed < n_prime) {
        const bool base_exhausted = current == n;
        const bool over_budget =
            !base_exhausted &&
            BigCount(static_cast<unsigned long>(placed - current)) +
                    base_report.prefix_sums[current] >
                budget;
        if (current > 0 && (base_exhausted || over_budget)) {
            design.sizes.push_back(current);
            current = 0;
            continue;
        }
        ++current;
        ++placed;
    }
    if (current > 0)
        design.sizes.push_back(current);
    design.last_block = static_cast<unsigned>(design.sizes.size()) - 1;

    const SetElement l = design.base.universe_size;
    design.combined.set_size = design.base.set_size;
    design.combined.universe_size = l * (design.last_block + 1);
    design.combined.sets.reserve(n_prime);
    for (std::size_t block = 0; block < design.sizes.size(); ++block) {
        const SetElement offset = block * l;
        for (std::uint64_t c = 0; c < design.sizes[block]; ++c) {
            std::vector<SetElement> set = design.base.sets[c];
            for (SetElement& e : set)
                e += offset;
            design.combined.sets.push_back(std::move(set));
        }
    }

    const RhoReport combined_report = verify(design.combined);
    for (const BigCount& prefix : combined_report.prefix_sums)
        if (prefix > budget)
            throw InternalError("block schedule violates the rho = 1 "
                                "prefix bound");
    return design;
}

std::vector<std::string> to_matrix(const DesignFamily& family) {
    std::vector<std::string> rows;
    rows.reserve(family.size());
    for (const auto& set : family.sets) {
        std::string row(family.universe_size, '0');
        for (SetElement e : set)
            row[e] = '1';
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace nw
