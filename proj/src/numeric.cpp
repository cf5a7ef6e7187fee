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

#include "nw/numeric.hpp"

#include <cstdio>

namespace nw {

BigCount ceil_rational(const Rational& r) {
    BigCount q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(),
               r.get_den().get_mpz_t());
    return q;
}

std::string to_fraction_string(const Rational& r) {
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_float_string(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", r.get_d());
    return buf;
}

namespace {

Rational canonical(const char* num, const char* den) {
    Rational r{BigCount{num}, BigCount{den}};
    r.canonicalize();
    return r;
}

} // namespace

const Rational& euler_lower_bound() {
    // 2.718281828459045 truncated, strictly below e = 2.71828182845904523...
    static const Rational e = canonical("2718281828459045", "1000000000000000");
    return e;
}

const Rational& euler_squared_lower_bound() {
    // 7.389056098930650 truncated, strictly below e^2 = 7.38905609893065022...
    static const Rational e2 = canonical("7389056098930650", "1000000000000000");
    return e2;
}

} // namespace nw
