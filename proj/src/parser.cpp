/*
   Copyright 2026 The symdecomp authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "symdecomp/parser.hpp"

#include <numeric>
#include <vector>

namespace symdecomp {

permutation parse_permutation(std::string_view text, std::size_t n) {
    if (n == 0)
        throw argument_error("parse_permutation: degree must be positive");
    parser_detail::cursor cur{text};
    cur.skip_ws();

    std::vector<std::size_t> img(n);
    std::iota(img.begin(), img.end(), std::size_t{1});

    if (cur.eof())
        return permutation(std::move(img));
    if (text.substr(cur.pos, 2) == "id") {
        cur.pos += 2;
        cur.skip_ws();
        if (!cur.eof())
            cur.fail("end of input");
        return permutation(std::move(img));
    }

    std::vector<bool> used(n, false);
    while (true) {
        cur.skip_ws();
        if (cur.eof())
            break;
        if (cur.peek() != '(')
            cur.fail("'('");
        ++cur.pos;
        std::vector<std::size_t> cycle;
        while (true) {
            cur.skip_ws();
            if (!cur.eof() && cur.peek() == ',') {
                ++cur.pos;
                cur.skip_ws();
            }
            if (!cur.eof() && cur.peek() == ')') {
                ++cur.pos;
                break;
            }
            const std::size_t point_pos = cur.pos;
            const std::uint64_t point = cur.small_number("a point of the cycle or ')'");
            if (point < 1 || point > n)
                throw parse_error(point_pos, "a point in [1, " + std::to_string(n) + "]",
                                  std::to_string(point));
            if (used[point - 1])
                throw parse_error(point_pos, "disjoint cycles",
                                  "repeated point " + std::to_string(point));
            used[point - 1] = true;
            cycle.push_back(point);
        }
        for (std::size_t k = 0; k < cycle.size(); ++k)
            img[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    }
    return permutation(std::move(img));
}

std::string render_permutation(const permutation& g) {
    std::vector<bool> seen(g.n(), false);
    std::string s;
    for (std::size_t start = 1; start <= g.n(); ++start) {
        if (seen[start - 1] || g.image(start) == start)
            continue;
        s += "(";
        std::size_t point = start;
        bool first = true;
        do {
            if (!first)
                s += " ";
            s += std::to_string(point);
            seen[point - 1] = true;
            point = g.image(point);
            first = false;
        } while (point != start);
        s += ")";
    }
    return s.empty() ? "id" : s;
}

}  // namespace symdecomp
