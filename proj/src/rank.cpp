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

#include "symdecomp/rank.hpp"

#include <algorithm>
#include <utility>

#include "symdecomp/errors.hpp"

namespace symdecomp {

using boost::multiprecision::cpp_int;

namespace {

cpp_int exact_div(const cpp_int& num, const cpp_int& den) {
    cpp_int q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (!r.is_zero())
        throw internal_error("fraction-free elimination: inexact division");
    return q;
}

std::size_t first_nonzero(const std::vector<cpp_int>& row, std::size_t cols) {
    for (std::size_t j = 0; j < cols; ++j)
        if (!row[j].is_zero())
            return j;
    return cols;
}

// Bareiss elimination over the leftmost `cols` columns; any extra columns in
// the rows (dependency bookkeeping) ride along through the same exact
// operations. Rows are pre-sorted by first nonzero column so staircase
// matrices eliminate without fill-in.
std::size_t eliminate(int_matrix& m, std::size_t cols) {
    if (m.empty())
        return 0;
    const std::size_t width = m[0].size();
    std::stable_sort(m.begin(), m.end(), [cols](const auto& a, const auto& b) {
        return first_nonzero(a, cols) < first_nonzero(b, cols);
    });

    std::size_t rank = 0;
    cpp_int prev = 1;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col].is_zero())
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[rank], m[pivot]);
        const cpp_int p = m[rank][col];
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][col].is_zero()) {
                // The one-step formula degenerates to scaling by p/prev.
                if (p != prev)
                    for (std::size_t j = col + 1; j < width; ++j)
                        if (!m[i][j].is_zero())
                            m[i][j] = exact_div(p * m[i][j], prev);
                continue;
            }
            for (std::size_t j = col + 1; j < width; ++j)
                m[i][j] = exact_div(p * m[i][j] - m[i][col] * m[rank][j], prev);
            m[i][col] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t fraction_free_rank(int_matrix m) {
    if (m.empty())
        return 0;
    const std::size_t cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols)
            throw argument_error("fraction_free_rank: ragged matrix");
    return eliminate(m, cols);
}

std::optional<std::vector<cpp_int>> dependent_combination(const int_matrix& m) {
    if (m.empty())
        return std::nullopt;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    int_matrix aug(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        if (m[i].size() != cols)
            throw argument_error("dependent_combination: ragged matrix");
        aug[i] = m[i];
        aug[i].resize(cols + rows, 0);
        aug[i][cols + i] = 1;
    }
    eliminate(aug, cols);
    for (const auto& row : aug) {
        const bool zero_left =
            std::all_of(row.begin(), row.begin() + cols, [](const cpp_int& v) {
                return v.is_zero();
            });
        if (!zero_left)
            continue;
        std::vector<cpp_int> combo(row.begin() + cols, row.end());
        const bool nonzero = std::any_of(combo.begin(), combo.end(), [](const cpp_int& v) {
            return !v.is_zero();
        });
        if (nonzero)
            return combo;
    }
    return std::nullopt;
}

}  // namespace symdecomp
