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

#include "nw/errors.hpp"

namespace nw {

/// An element of GF(2^r), stored as the bit-vector of its GF(2)
/// coordinates: bit k is the coefficient of x^k. Always < 2^r.
using GfElement = std::uint32_t;

/// A binary extension field GF(q), q = 2^r, 1 <= r <= 16, with a fixed
/// canonical representation: the modulus is the lexicographically smallest
/// monic irreducible polynomial of degree r over GF(2) with nonzero
/// constant term. Two FieldSpec instances for the same order are
/// bit-identical, so everything built on top of them is reproducible.
///
/// All operations are pure; a FieldSpec is immutable after construction
/// and safe to share across threads.
class FieldSpec {
public:
    /// Throws NotAPowerOfTwo unless order == 2^r for some r >= 1,
    /// DegreeTooLarge if r > 16.
    explicit FieldSpec(std::uint32_t order);

    std::uint32_t order() const { return q_; }            ///< q = 2^r
    unsigned extension_degree() const { return r_; }      ///< r
    std::uint32_t modulus() const { return modulus_; }    ///< bit k = coeff of x^k

    /// a + b. Characteristic 2, so subtraction is the same operation and
    /// every element is its own additive inverse.
    GfElement add(GfElement a, GfElement b) const;
    GfElement sub(GfElement a, GfElement b) const { return add(a, b); }

    /// Carry-less product reduced modulo the field modulus.
    GfElement mul(GfElement a, GfElement b) const;

    /// Multiplicative inverse; throws DivisionByZero for a == 0.
    GfElement inv(GfElement a) const;

    bool operator==(const FieldSpec&) const = default;

private:
    unsigned r_;
    std::uint32_t q_;
    std::uint32_t modulus_;

    void check_element(GfElement a) const;
};

/// The hard-coded canonical modulus for extension degree r in [1, 16],
/// as the bitmask described on FieldSpec. The same table is published in
/// docs/modulus-table.txt. Throws DegreeTooLarge outside [1, 16].
std::uint32_t canonical_modulus(unsigned r);

} // namespace nw
