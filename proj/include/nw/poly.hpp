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
#include <optional>
#include <span>
#include <vector>

#include "nw/gf.hpp"
#include "nw/numeric.hpp"

namespace nw {

/// A polynomial over GF(q) as a coefficient vector, index k holding the
/// coefficient of x^k. Trailing zero coefficients are trimmed on
/// construction, so the zero polynomial has an empty vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<GfElement> coeffs);
    static Poly constant(GfElement c);

    const std::vector<GfElement>& coeffs() const { return coeffs_; }

    /// Degree of the polynomial, -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Coefficient of x^k; 0 beyond the stored length.
    GfElement coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : 0;
    }

    bool operator==(const Poly&) const = default;

private:
    std::vector<GfElement> coeffs_;
};

/// Number of polynomials addressable by poly_from_index: q^q, or nullopt
/// when that exceeds the uint64 range (q >= 16). In the nullopt case every
/// representable index is valid.
std::optional<std::uint64_t> poly_index_limit(const FieldSpec& field);

/// The index-to-polynomial bijection of the refined construction: the
/// coefficient of x^k is the k-th base-q digit of the index. Throws
/// IndexTooLarge for index >= q^q.
Poly poly_from_index(const FieldSpec& field, std::uint64_t index);

/// Inverse of poly_from_index (digit re-packing).
std::uint64_t poly_to_index(const FieldSpec& field, const Poly& p);

/// a - b coefficient-wise. Characteristic 2, so this is also a + b.
Poly poly_sub(const FieldSpec& field, const Poly& a, const Poly& b);

/// Horner evaluation at x. Throws ElementOutOfRange for x >= q.
GfElement poly_eval(const FieldSpec& field, const Poly& p, GfElement x);

/// Number of roots of p over GF(q) by exhaustive evaluation, with the
/// convention that every constant polynomial -- including the zero
/// polynomial -- has zero roots.
unsigned count_roots(const FieldSpec& field, const Poly& p);

/// Sum of 2^count_roots(p) over the given polynomials, exactly.
BigCount lambda_sum(const FieldSpec& field, std::span<const Poly> polys);

/// Same sum over the index range [first, last) of poly_from_index, without
/// materializing the family.
BigCount lambda_sum_indexed(const FieldSpec& field, std::uint64_t first,
                            std::uint64_t last);

/// Closed form of lambda_sum over the family of all polynomials with
/// degree <= d whose x^d coefficient equals top: a q^d-element family
/// indexed as [top*q^d, (top+1)*q^d). For top != 0 this evaluates
/// sum_{i=0..d} q^(d-i) * C(q,i); for top == 0 it applies the recursion
/// through the top != 0 values of lower degrees. Exact in all cases.
/// Throws DegreeOutOfRange for d >= q, ElementOutOfRange for top >= q.
BigCount lambda_sum_closed_form(const FieldSpec& field, unsigned d,
                                GfElement top);

} // namespace nw
