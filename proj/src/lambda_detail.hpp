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
#include <vector>

#include "nw/numeric.hpp"

namespace nw::detail {

// Exact lambda sums for the degree-<=k families with a fixed x^k
// coefficient: top[k] for a nonzero coefficient, zero[k] for coefficient
// 0. top[k] = sum_{i=0..k} q^(k-i) C(q,i) satisfies
// top[k] = q*top[k-1] + C(q,k), and zero[k] = (q-1)*sum_{j<k} top[j] + 1,
// so one O(k_max) pass yields every value. Valid for k_max <= q (the
// zero[] column is meaningful at k_max == q even though no such family
// exists for top[]; callers never read top[q]).
struct LambdaTable {
    std::vector<BigCount> top;
    std::vector<BigCount> zero;
};

inline LambdaTable lambda_table(std::uint32_t q, unsigned k_max) {
    LambdaTable t;
    t.top.reserve(k_max + 1);
    t.zero.reserve(k_max + 1);
    BigCount binom = 1;        // C(q, k)
    BigCount top_partial = 0;  // sum of top[0..k-1]
    for (unsigned k = 0; k <= k_max; ++k) {
        if (k == 0) {
            t.top.emplace_back(1);
        } else {
            binom *= q - (k - 1);
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), k);
            top_partial += t.top.back();
            t.top.push_back(t.top.back() * q + binom);
        }
        t.zero.push_back(top_partial * (q - 1) + 1);
    }
    return t;
}

} // namespace nw::detail
