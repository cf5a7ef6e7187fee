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

#include <stdexcept>
#include <string>

namespace nw {

/// Base class for all errors raised by this library. Everything derived
/// from it maps to CLI exit code 2 (bad parameters / malformed input),
/// except InternalError which maps to exit code 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct NotAPowerOfTwo : Error { using Error::Error; };
struct DegreeTooLarge : Error { using Error::Error; };
struct ElementOutOfRange : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct IndexTooLarge : Error { using Error::Error; };
struct DegreeOutOfRange : Error { using Error::Error; };
struct TooManySets : Error { using Error::Error; };
struct InvalidRho : Error { using Error::Error; };
struct MalformedDesign : Error { using Error::Error; };
struct InvalidParameter : Error { using Error::Error; };

/// A violated internal invariant, e.g. a self-check after construction
/// failed. Never caused by user input.
struct InternalError : Error { using Error::Error; };

} // namespace nw
