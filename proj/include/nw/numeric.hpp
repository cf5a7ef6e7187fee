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

#include <gmpxx.h>

namespace nw {

/// Exact non-negative integer counts (overlap sums grow like 2^q and set
/// counts like q^d, so fixed-width types are not an option).
using BigCount = mpz_class;

/// Exact rational values such as the overlap parameter rho.
using Rational = mpq_class;

/// Smallest integer >= r.
BigCount ceil_rational(const Rational& r);

/// "p/q" (or just "p" when the denominator is 1).
std::string to_fraction_string(const Rational& r);

/// Decimal rendering with 12 significant digits, e.g. "1.25".
std::string to_float_string(const Rational& r);

/// Strict lower bound on Euler's number e, as an exact rational.
/// value < e holds exactly whenever value <= this constant, and the gap to
/// e (~2e-16) is far below any quantity this library compares against it.
const Rational& euler_lower_bound();

/// Strict lower bound on e^2, same purpose as euler_lower_bound().
const Rational& euler_squared_lower_bound();

} // namespace nw
