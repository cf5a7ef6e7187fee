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

#include "nw/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace nw {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw MalformedDesign("line " + std::to_string(line) + ": " + what);
}

[[noreturn]] void fail(std::size_t line, std::size_t col,
                       const std::string& what) {
    throw MalformedDesign("line " + std::to_string(line) + ", col " +
                          std::to_string(col) + ": " + what);
}

// Whitespace-separated unsigned integers with 1-based column tracking.
std::vector<std::uint64_t> parse_numbers(const std::string& text,
                                         std::size_t line) {
    std::vector<std::uint64_t> values;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r') {
            ++pos;
            continue;
        }
        std::uint64_t value = 0;
        auto [end, ec] = std::from_chars(text.data() + pos,
                                         text.data() + text.size(), value);
        if (ec != std::errc{} || (end != text.data() + text.size() &&
                                  *end != ' ' && *end != '\t' && *end != '\r'))
            fail(line, pos + 1, "expected an unsigned integer");
        values.push_back(value);
        pos = static_cast<std::size_t>(end - text.data());
    }
    return values;
}

bool looks_like_matrix_row(const std::string& text) {
    std::string trimmed = text;
    while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' '))
        trimmed.pop_back();
    return trimmed.size() >= 2 &&
           std::all_of(trimmed.begin(), trimmed.end(),
                       [](char c) { return c == '0' || c == '1'; });
}

DesignFamily read_matrix(const std::string& first_line, std::istream& in) {
    DesignFamily family;
    std::string line = first_line;
    std::size_t line_no = 1;
    for (;;) {
        while (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!line.empty()) {
            if (family.sets.empty()) {
                family.universe_size = line.size();
            } else if (line.size() != family.universe_size) {
                fail(line_no, "matrix row has " + std::to_string(line.size()) +
                                  " columns, expected " +
                                  std::to_string(family.universe_size));
            }
            std::vector<SetElement> set;
            for (std::size_t col = 0; col < line.size(); ++col) {
                if (line[col] == '1')
                    set.push_back(col);
                else if (line[col] != '0')
                    fail(line_no, col + 1, "matrix entries must be 0 or 1");
            }
            if (family.sets.empty())
                family.set_size = static_cast<std::uint32_t>(set.size());
            else if (set.size() != family.set_size)
                fail(line_no, "row weight " + std::to_string(set.size()) +
                                  " differs from q = " +
                                  std::to_string(family.set_size));
            family.sets.push_back(std::move(set));
        }
        if (!std::getline(in, line))
            break;
        ++line_no;
    }
    return family;
}

DesignFamily read_sets(const std::string& header, std::istream& in) {
    const auto head = parse_numbers(header, 1);
    if (head.size() != 3)
        fail(1, "header must be \"n q l\"");
    DesignFamily family;
    const std::uint64_t n = head[0];
    if (head[1] > UINT32_MAX)
        fail(1, "set size q out of range");
    family.set_size = static_cast<std::uint32_t>(head[1]);
    family.universe_size = head[2];
    family.sets.reserve(n);

    std::string line;
    std::size_t line_no = 1;
    while (family.sets.size() < n) {
        if (!std::getline(in, line))
            fail(line_no, "unexpected end of file: expected " +
                              std::to_string(n) + " set lines, got " +
                              std::to_string(family.sets.size()));
        ++line_no;
        auto values = parse_numbers(line, line_no);
        if (values.empty())
            continue;  // blank lines between sets are tolerated
        if (values.size() != family.set_size)
            fail(line_no, "set has " + std::to_string(values.size()) +
                              " elements, expected q = " +
                              std::to_string(family.set_size));
        for (std::size_t k = 0; k < values.size(); ++k) {
            if (values[k] >= family.universe_size)
                fail(line_no, "element " + std::to_string(values[k]) +
                                  " not below l = " +
                                  std::to_string(family.universe_size));
            if (k > 0 && values[k] <= values[k - 1])
                fail(line_no, "elements must be strictly increasing "
                              "(duplicate or unsorted value " +
                                  std::to_string(values[k]) + ")");
        }
        family.sets.push_back(std::move(values));
    }
    return family;
}

} // namespace

DesignFamily read_design(std::istream& in) {
    std::string first;
    if (!std::getline(in, first))
        throw MalformedDesign("line 1: empty input");
    if (looks_like_matrix_row(first))
        return read_matrix(first, in);
    return read_sets(first, in);
}

DesignFamily read_design_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw MalformedDesign("cannot open " + path);
    try {
        return read_design(in);
    } catch (const MalformedDesign& e) {
        throw MalformedDesign(path + ": " + e.what());
    }
}

void write_design(std::ostream& out, const DesignFamily& family,
                  DesignFormat format) {
    if (format == DesignFormat::matrix) {
        for (const auto& set : family.sets) {
            std::string row(family.universe_size, '0');
            for (SetElement e : set)
                row[e] = '1';
            out << row << '\n';
        }
        return;
    }
    out << family.size() << ' ' << family.set_size << ' '
        << family.universe_size << '\n';
    for (const auto& set : family.sets) {
        for (std::size_t k = 0; k < set.size(); ++k)
            out << (k ? " " : "") << set[k];
        out << '\n';
    }
}

void write_design_file(const std::string& path, const DesignFamily& family,
                       DesignFormat format) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path);
    write_design(out, family, format);
}

} // namespace nw
