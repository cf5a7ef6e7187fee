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

#include "nw/gf.hpp"

#include <array>
#include <bit>
#include <string>

namespace nw {

namespace {

// Lexicographically smallest monic irreducible polynomial of degree r over
// GF(2) with nonzero constant term, bit k = coefficient of x^k. Published
// in docs/modulus-table.txt; re-derived from scratch by the unit tests.
constexpr std::array<std::uint32_t, 17> kCanonicalModulus = {
    0,        // unused
    0x3,      // x + 1
    0x7,      // x^2 + x + 1
    0xb,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x83,     // x^7 + x + 1
    0x11b,    // x^8 + x^4 + x^3 + x + 1
    0x203,    // x^9 + x + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1009,   // x^12 + x^3 + 1
    0x201b,   // x^13 + x^4 + x^3 + x + 1
    0x4021,   // x^14 + x^5 + 1
    0x8003,   // x^15 + x + 1
    0x1002b,  // x^16 + x^5 + x^3 + x + 1
};

constexpr unsigned kMaxDegree = 16;

} // namespace

std::uint32_t canonical_modulus(unsigned r) {
    if (r < 1 || r > kMaxDegree)
        throw DegreeTooLarge("extension degree r must be in [1, 16], got " +
                             std::to_string(r));
    return kCanonicalModulus[r];
}

FieldSpec::FieldSpec(std::uint32_t order) {
    if (order < 2 || !std::has_single_bit(order))
        throw NotAPowerOfTwo("q must be a power of 2 (q = 2^r, r >= 1), got " +
                             std::to_string(order));
    r_ = static_cast<unsigned>(std::countr_zero(order));
    if (r_ > kMaxDegree)
        throw DegreeTooLarge("field order " + std::to_string(order) +
                             " exceeds 2^16");
    q_ = order;
    modulus_ = kCanonicalModulus[r_];
}

void FieldSpec::check_element(GfElement a) const {
    if (a >= q_)
        throw ElementOutOfRange("element " + std::to_string(a) +
                                " not in GF(" + std::to_string(q_) + ")");
}

GfElement FieldSpec::add(GfElement a, GfElement b) const {
    check_element(a);
    check_element(b);
    return a ^ b;
}

GfElement FieldSpec::mul(GfElement a, GfElement b) const {
    check_element(a);
    check_element(b);
    // Shift-and-XOR: accumulate a * x^k for every set bit k of b, reducing
    // modulo the field polynomial whenever the x^r bit appears.
    std::uint32_t acc = 0;
    std::uint32_t shifted = a;
    while (b != 0) {
        if (b & 1)
            acc ^= shifted;
        b >>= 1;
        shifted <<= 1;
        if (shifted & q_)
            shifted ^= modulus_;
    }
    return acc;
}

GfElement FieldSpec::inv(GfElement a) const {
    check_element(a);
    if (a == 0)
        throw DivisionByZero("zero has no multiplicative inverse");
    // a^(q-2) via square-and-multiply; the nonzero elements form a group
    // of order q-1.
    GfElement result = 1;
    GfElement base = a;
    std::uint32_t e = q_ - 2;
    while (e != 0) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

} // namespace nw
