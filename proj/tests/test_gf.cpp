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

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

#include "nw/gf.hpp"

using namespace nw;

namespace {

// Test-side oracle: GF(2)[x] remainder on bitmasks.
std::uint32_t poly2_mod(std::uint32_t a, std::uint32_t b) {
    const int db = 31 - __builtin_clz(b);
    while (a != 0) {
        const int da = 31 - __builtin_clz(a);
        if (da < db)
            break;
        a ^= b << (da - db);
    }
    return a;
}

// Irreducibility over GF(2) by trial division against every polynomial of
// degree 1..r/2.
bool irreducible(std::uint32_t mask, unsigned r) {
    for (unsigned d = 1; d <= r / 2; ++d)
        for (std::uint32_t g = 1u << d; g < (2u << d); ++g)
            if (poly2_mod(mask, g) == 0)
                return false;
    return true;
}

std::uint32_t smallest_irreducible(unsigned r) {
    for (std::uint32_t mask = (1u << r) | 1; mask < (2u << r); mask += 2)
        if (irreducible(mask, r))
            return mask;
    return 0;
}

} // namespace

TEST_CASE("canonical moduli match an independent derivation") {
    for (unsigned r = 1; r <= 16; ++r) {
        CAPTURE(r);
        const std::uint32_t expected = smallest_irreducible(r);
        REQUIRE(expected != 0);
        CHECK(canonical_modulus(r) == expected);
    }
    CHECK_THROWS_AS(canonical_modulus(0), DegreeTooLarge);
    CHECK_THROWS_AS(canonical_modulus(17), DegreeTooLarge);
}

TEST_CASE("published modulus table agrees with the code") {
    std::ifstream table(NW_SOURCE_DIR "/docs/modulus-table.txt");
    REQUIRE(table.good());
    unsigned rows = 0;
    std::string line;
    while (std::getline(table, line)) {
        if (line.empty())
            continue;
        std::istringstream fields(line);
        unsigned r = 0;
        char colon = 0;
        std::string hex;
        fields >> r >> colon >> hex;
        REQUIRE(colon == ':');
        CHECK(canonical_modulus(r) == std::stoul(hex, nullptr, 16));
        ++rows;
    }
    CHECK(rows == 16);
}

TEST_CASE("field construction") {
    SUBCASE("q=2 uses x+1") {
        const FieldSpec f(2);
        CHECK(f.extension_degree() == 1);
        CHECK(f.modulus() == 0x3);
    }
    SUBCASE("q=4 uses the unique irreducible quadratic") {
        const FieldSpec f(4);
        CHECK(f.extension_degree() == 2);
        CHECK(f.modulus() == 0x7);  // x^2 + x + 1
    }
    SUBCASE("rejects non-powers of two") {
        CHECK_THROWS_AS(FieldSpec(3), NotAPowerOfTwo);
        CHECK_THROWS_AS(FieldSpec(0), NotAPowerOfTwo);
        CHECK_THROWS_AS(FieldSpec(1), NotAPowerOfTwo);
        CHECK_THROWS_AS(FieldSpec(12), NotAPowerOfTwo);
    }
    SUBCASE("rejects degrees above 16") {
        CHECK_THROWS_AS(FieldSpec(1u << 17), DegreeTooLarge);
    }
    SUBCASE("deterministic across constructions") {
        CHECK(FieldSpec(256) == FieldSpec(256));
    }
}

TEST_CASE("addition is XOR with self-inverse elements") {
    const FieldSpec f(4);
    CHECK(f.add(2, 2) == 0);
    CHECK(f.add(2, 0) == 2);
    CHECK(f.add(2, 3) == 1);
    CHECK_THROWS_AS(f.add(4, 0), ElementOutOfRange);
}

TEST_CASE("multiplication in GF(4)") {
    const FieldSpec f(4);
    CHECK(f.mul(2, 1) == 2);
    // x * x = x^2 -> x + 1 mod x^2+x+1
    CHECK(f.mul(2, 2) == 3);
    // x * (x+1) = x^2 + x -> 1
    CHECK(f.mul(2, 3) == 1);
    CHECK_THROWS_AS(f.mul(1, 7), ElementOutOfRange);
}

TEST_CASE("inverses") {
    const FieldSpec f(4);
    CHECK(f.inv(1) == 1);
    CHECK(f.inv(2) == 3);
    CHECK_THROWS_AS(f.inv(0), DivisionByZero);

    // Exhaustive-search oracle over every supported small field.
    for (std::uint32_t q : {2u, 4u, 8u, 16u, 256u}) {
        const FieldSpec field(q);
        for (GfElement a = 1; a < q; ++a) {
            GfElement expected = 0;
            for (GfElement b = 1; b < q; ++b)
                if (field.mul(a, b) == 1) {
                    expected = b;
                    break;
                }
            CAPTURE(q);
            CAPTURE(a);
            REQUIRE(expected != 0);
            CHECK(field.inv(a) == expected);
            CHECK(field.mul(a, field.inv(a)) == 1);
        }
    }
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (std::uint32_t q : {2u, 4u, 8u, 16u}) {
        const FieldSpec f(q);
        CAPTURE(q);
        for (GfElement a = 0; a < q; ++a)
            for (GfElement b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (GfElement c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) ==
                          f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        for (GfElement a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, a) == 0);
            if (a != 0)
                CHECK(f.mul(a, f.inv(a)) == 1);
        }
    }
}

TEST_CASE("Frobenius fixed points: a^q == a") {
    for (std::uint32_t q : {2u, 4u, 8u, 16u}) {
        const FieldSpec f(q);
        for (GfElement a = 0; a < q; ++a) {
            GfElement power = a;
            for (std::uint32_t e = 1; e < q; ++e)
                power = f.mul(power, a);
            CAPTURE(q);
            CAPTURE(a);
            CHECK(power == a);
        }
    }
}
