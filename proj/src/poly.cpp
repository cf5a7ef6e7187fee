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

#include "nw/poly.hpp"

#include <algorithm>
#include <string>

#include "lambda_detail.hpp"

namespace nw {

Poly::Poly(std::vector<GfElement> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Poly Poly::constant(GfElement c) {
    return c == 0 ? Poly{} : Poly{{c}};
}

std::optional<std::uint64_t> poly_index_limit(const FieldSpec& field) {
    const std::uint64_t q = field.order();
    std::uint64_t limit = 1;
    for (std::uint32_t k = 0; k < field.order(); ++k) {
        if (limit > UINT64_MAX / q)
            return std::nullopt;
        limit *= q;
    }
    return limit;
}

namespace {

void check_index(const FieldSpec& field, std::uint64_t index) {
    if (auto limit = poly_index_limit(field); limit && index >= *limit)
        throw IndexTooLarge("polynomial index " + std::to_string(index) +
                            " not below q^q = " + std::to_string(*limit));
}

} // namespace

Poly poly_from_index(const FieldSpec& field, std::uint64_t index) {
    check_index(field, index);
    const std::uint64_t q = field.order();
    std::vector<GfElement> coeffs;
    for (std::uint64_t rest = index; rest != 0; rest /= q)
        coeffs.push_back(static_cast<GfElement>(rest % q));
    return Poly{std::move(coeffs)};
}

std::uint64_t poly_to_index(const FieldSpec& field, const Poly& p) {
    const std::uint64_t q = field.order();
    std::uint64_t index = 0;
    const auto& coeffs = p.coeffs();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        index = index * q + *it;
    return index;
}

Poly poly_sub(const FieldSpec& field, const Poly& a, const Poly& b) {
    std::vector<GfElement> coeffs(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        coeffs[k] = field.sub(a.coeff(k), b.coeff(k));
    return Poly{std::move(coeffs)};
}

GfElement poly_eval(const FieldSpec& field, const Poly& p, GfElement x) {
    if (x >= field.order())
        throw ElementOutOfRange("evaluation point " + std::to_string(x) +
                                " not in GF(" + std::to_string(field.order()) +
                                ")");
    GfElement acc = 0;
    const auto& coeffs = p.coeffs();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = field.add(field.mul(acc, x), *it);
    return acc;
}

unsigned count_roots(const FieldSpec& field, const Poly& p) {
    if (p.is_constant())
        return 0;
    unsigned roots = 0;
    for (GfElement x = 0; x < field.order(); ++x)
        if (poly_eval(field, p, x) == 0)
            ++roots;
    return roots;
}

BigCount lambda_sum(const FieldSpec& field, std::span<const Poly> polys) {
    BigCount total = 0;
    BigCount term;
    for (const Poly& p : polys) {
        mpz_ui_pow_ui(term.get_mpz_t(), 2, count_roots(field, p));
        total += term;
    }
    return total;
}

BigCount lambda_sum_indexed(const FieldSpec& field, std::uint64_t first,
                            std::uint64_t last) {
    BigCount total = 0;
    BigCount term;
    for (std::uint64_t i = first; i < last; ++i) {
        mpz_ui_pow_ui(term.get_mpz_t(), 2,
                      count_roots(field, poly_from_index(field, i)));
        total += term;
    }
    return total;
}

BigCount lambda_sum_closed_form(const FieldSpec& field, unsigned d,
                                GfElement top) {
    if (d >= field.order())
        throw DegreeOutOfRange("degree " + std::to_string(d) +
                               " not below field order " +
                               std::to_string(field.order()));
    if (top >= field.order())
        throw ElementOutOfRange("top coefficient " + std::to_string(top) +
                                " not in GF(" + std::to_string(field.order()) +
                                ")");
    auto table = detail::lambda_table(field.order(), d);
    return top == 0 ? table.zero[d] : table.top[d];
}

} // namespace nw
