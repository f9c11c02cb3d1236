// Copyright 2026 The fwe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Exact Gauss-Jordan elimination over a field (Rational or QuadElem).

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fwe {

template <class S>
using Matrix = std::vector<std::vector<S>>;

template <class S>
struct LinearSolution {
    bool consistent = false;
    std::size_t rank = 0;
    std::vector<S> particular;             // free variables set to zero
    std::vector<std::vector<S>> nullspace;  // basis of the homogeneous solutions

    bool unique() const noexcept { return consistent && nullspace.empty(); }
};

/// Solves A x = rhs for a rows x cols matrix A (rows may exceed cols).
template <class S>
LinearSolution<S> solve_linear(Matrix<S> a, std::vector<S> rhs) {
    const std::size_t rows = a.size();
    if (rhs.size() != rows) throw std::invalid_argument("solve_linear: rhs size mismatch");
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (const auto& row : a)
        if (row.size() != cols) throw std::invalid_argument("solve_linear: ragged matrix");

    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(rhs[p], rhs[r]);
        const S inv = S(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const S f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_cols.push_back(c);
        ++r;
    }

    LinearSolution<S> out;
    out.rank = r;
    out.consistent = true;
    for (std::size_t i = r; i < rows; ++i)
        if (!rhs[i].is_zero()) out.consistent = false;

    out.particular.assign(cols, S(0));
    for (std::size_t i = 0; i < r; ++i) out.particular[pivot_cols[i]] = rhs[i];

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<S> v(cols, S(0));
        v[f] = S(1);
        for (std::size_t i = 0; i < r; ++i) v[pivot_cols[i]] = -a[i][f];
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

}  // namespace fwe
