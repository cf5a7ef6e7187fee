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

#include <iosfwd>
#include <string>

#include "nw/design.hpp"

namespace nw {

/// On-disk representations of a design family.
///
/// Sets (canonical): line 1 is "n q l", followed by n lines of q
/// space-separated, strictly increasing integers.
///
/// Matrix: n lines of l characters from {0,1}; row i has a 1 exactly at
/// the columns of set i. q is recovered as the per-row weight.
enum class DesignFormat { sets, matrix };

/// Parses either format, auto-detected: a first line consisting solely of
/// two or more 0/1 characters is read as a matrix, anything else as the
/// canonical header. Throws MalformedDesign with the offending line (and
/// column where it applies) in the message.
DesignFamily read_design(std::istream& in);

/// read_design from a file; the filename is prefixed to error messages.
DesignFamily read_design_file(const std::string& path);

void write_design(std::ostream& out, const DesignFamily& family,
                  DesignFormat format);

void write_design_file(const std::string& path, const DesignFamily& family,
                       DesignFormat format);

} // namespace nw
