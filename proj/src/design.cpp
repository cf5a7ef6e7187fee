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

#include "nw/design.hpp"

#include <string>

#include "lambda_detail.hpp"

namespace nw {

DesignFamily build_refined_nw(const FieldSpec& field, std::uint64_t n) {
    if (n == 0)
        throw InvalidParameter("set count n must be at least 1");
    if (auto limit = poly_index_limit(field); limit && n > *limit)
        throw TooManySets("set count " + std::to_string(n) +
                          " exceeds q^q = " + std::to_string(*limit));
    const std::uint64_t q = field.order();
    DesignFamily family;
    family.set_size = field.order();
    family.universe_size = q * q;
    family.sets.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const Poly p = poly_from_index(field, i);
        std::vector<SetElement> set;
        set.reserve(q);
        // (j, p(j)) -> j*q + p(j); increasing in j, so already sorted.
        for (GfElement j = 0; j < q; ++j)
            set.push_back(static_cast<SetElement>(j) * q +
                          poly_eval(field, p, j));
        family.sets.push_back(std::move(set));
    }
    return family;
}

unsigned intersection_size(std::span<const SetElement> a,
                           std::span<const SetElement> b) {
    unsigned common = 0;
    std::size_t ia = 0;
    std::size_t ib = 0;
    while (ia < a.size() && ib < b.size()) {
        if (a[ia] < b[ib]) {
            ++ia;
        } else if (b[ib] < a[ia]) {
            ++ib;
        } else {
            ++common;
            ++ia;
            ++ib;
        }
    }
    return common;
}

namespace {

void check_family(const DesignFamily& family) {
    for (std::size_t i = 0; i < family.sets.size(); ++i) {
        const auto& set = family.sets[i];
        const std::string where = "set " + std::to_string(i);
        if (set.size() != family.set_size)
            throw MalformedDesign(where + " has " +
                                  std::to_string(set.size()) +
                                  " elements, expected q = " +
                                  std::to_string(family.set_size));
        for (std::size_t k = 0; k < set.size(); ++k) {
            if (set[k] >= family.universe_size)
                throw MalformedDesign(where + ": element " +
                                      std::to_string(set[k]) +
                                      " not below l = " +
                                      std::to_string(family.universe_size));
            if (k > 0 && set[k] <= set[k - 1])
                throw MalformedDesign(where + ": elements must be strictly "
                                      "increasing (duplicate or unsorted at "
                                      "position " + std::to_string(k) + ")");
        }
    }
}

} // namespace

RhoReport verify(const DesignFamily& family) {
    check_family(family);
    const std::size_t n = family.size();
    RhoReport report;
    report.prefix_sums.reserve(n);
    report.max_overlap = 0;
    report.rho_weak_n = 0;
    report.rho_weak_prefix = 0;

    // Overlap terms 2^|intersection| fit in a uint64 accumulator as long
    // as q <= 40 and n is moderate; fall back to exact big integers for
    // anything wider.
    const bool narrow = family.set_size <= 40 && n <= (1u << 20);
    for (std::size_t i = 0; i < n; ++i) {
        BigCount prefix = 0;
        if (narrow) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < i; ++j) {
                const unsigned overlap =
                    intersection_size(family.sets[i], family.sets[j]);
                if (overlap > report.max_overlap)
                    report.max_overlap = overlap;
                acc += std::uint64_t{1} << overlap;
            }
            prefix = BigCount{static_cast<unsigned long>(acc)};
        } else {
            BigCount term;
            for (std::size_t j = 0; j < i; ++j) {
                const unsigned overlap =
                    intersection_size(family.sets[i], family.sets[j]);
                if (overlap > report.max_overlap)
                    report.max_overlap = overlap;
                mpz_ui_pow_ui(term.get_mpz_t(), 2, overlap);
                prefix += term;
            }
        }
        Rational by_n{prefix, BigCount{static_cast<unsigned long>(n)}};
        by_n.canonicalize();
        if (by_n > report.rho_weak_n)
            report.rho_weak_n = by_n;
        Rational by_prefix{prefix, BigCount{static_cast<unsigned long>(i + 1)}};
        by_prefix.canonicalize();
        if (by_prefix > report.rho_weak_prefix)
            report.rho_weak_prefix = by_prefix;
        report.prefix_sums.push_back(std::move(prefix));
    }
    mpz_ui_pow_ui(report.rho_standard.get_mpz_t(), 2, report.max_overlap);
    return report;
}

BigCount prefix_overlap_closed_form(const FieldSpec& field, std::uint64_t i) {
    if (auto limit = poly_index_limit(field); limit && i >= *limit)
        throw IndexTooLarge("index " + std::to_string(i) +
                            " not below q^q = " + std::to_string(*limit));
    const std::uint64_t q = field.order();

    // Base-q digits of i+1, computed as the digits of i plus a carried 1
    // so that the i+1 == q^q boundary cannot overflow uint64.
    std::vector<std::uint32_t> digits;
    for (std::uint64_t rest = i; rest != 0; rest /= q)
        digits.push_back(static_cast<std::uint32_t>(rest % q));
    for (std::size_t k = 0;; ++k) {
        if (k == digits.size())
            digits.push_back(0);
        if (digits[k] + 1 < q) {
            ++digits[k];
            break;
        }
        digits[k] = 0;
    }

    unsigned top = static_cast<unsigned>(digits.size()) - 1;  // position of highest digit
    unsigned lowest = 0;                                      // position of lowest nonzero digit
    while (digits[lowest] == 0)
        ++lowest;

    // sum_{k} digits[k] * top_table[k] over nonzero digits, with the
    // single set contributed at the lowest position counted with its own
    // top coefficient equal to 0 instead of 1.
    const auto table = detail::lambda_table(field.order(), top);
    BigCount result = table.zero[lowest] - table.top[lowest];
    for (unsigned k = lowest; k <= top; ++k)
        if (digits[k] != 0)
            result += table.top[k] * digits[k];
    return result;
}

Rational rho_upper_bound(std::uint32_t q) {
    if (q < 2)
        throw InvalidParameter("q must be at least 2");
    BigCount num;
    BigCount den;
    mpz_ui_pow_ui(num.get_mpz_t(), q + 1, q);
    mpz_ui_pow_ui(den.get_mpz_t(), q, q);
    Rational bound{num, den};
    bound.canonicalize();
    return bound;
}

} // namespace nw
