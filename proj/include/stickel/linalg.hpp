/*
   Copyright 2026 The Stickel Authors

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

#ifndef STICKEL_LINALG_HPP
#define STICKEL_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "stickel/determinant.hpp"
#include "stickel/error.hpp"
#include "stickel/ring.hpp"

namespace stickel {

template <class R>
using Vector = std::vector<typename R::Element>;

namespace detail {

// In-place reduced row echelon form; returns the pivot column of each
// nonzero row.
template <CoefficientRing R>
    requires(R::is_field)
std::vector<std::size_t> rref(const R& k, Matrix<R>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && k.is_zero(m[pivot][col])) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[row]);
        const auto inv = *k.try_inverse(m[row][col]);
        for (auto& v : m[row]) v = k.mul(v, inv);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || k.is_zero(m[i][col])) continue;
            const auto factor = m[i][col];
            for (std::size_t j = col; j < m[i].size(); ++j) {
                m[i][j] = k.sub(m[i][j], k.mul(factor, m[row][j]));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

/// Basis of {v : A v = 0}. Basis vector i has a one in the i-th free column
/// and zeros in the other free columns, so the free-column entries of any
/// kernel vector are its coordinates in this basis.
template <CoefficientRing R>
    requires(R::is_field)
std::vector<Vector<R>> nullspace(const R& k, Matrix<R> a, std::size_t cols) {
    const auto pivots = detail::rref(k, a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vector<R>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector<R> v(cols, k.zero());
        v[free] = k.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = k.neg(a[i][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Free columns matching the basis order of nullspace().
template <CoefficientRing R>
    requires(R::is_field)
std::vector<std::size_t> free_columns(const R& k, Matrix<R> a, std::size_t cols) {
    const auto pivots = detail::rref(k, a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cols; ++c) {
        if (!is_pivot[c]) out.push_back(c);
    }
    return out;
}

/// Some x with A x = b, or nothing when the system is inconsistent.
template <CoefficientRing R>
    requires(R::is_field)
std::optional<Vector<R>> solve(const R& k, Matrix<R> a, const Vector<R>& b) {
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    if (a.size() != b.size()) throw DimensionMismatch("right-hand side length");
    for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
    const auto pivots = detail::rref(k, a, cols + 1);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    Vector<R> x(cols, k.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
    return x;
}

/**
 * Accumulates vectors and reports the first one that is a combination of
 * its predecessors, with the coefficients of that combination.
 */
template <CoefficientRing R>
    requires(R::is_field)
class LinearDependence {
   public:
    LinearDependence(const R& k, std::size_t dim) : k_(k), dim_(dim) {}

    /// Coefficients c with v = sum c_i v_i over the previously added vectors,
    /// or nothing (and v is kept) when v is independent.
    std::optional<Vector<R>> add(const Vector<R>& v) {
        if (v.size() != dim_) throw DimensionMismatch("vector length");
        const std::size_t n = count_;
        Vector<R> row = v;
        Vector<R> combo(n + 1, k_.zero());
        combo[n] = k_.one();
        // row tracks v - sum(combo-weighted earlier vectors) as rows are eliminated.
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto& factor = row[pivots_[i]];
            if (k_.is_zero(factor)) continue;
            const auto f = factor;
            for (std::size_t j = 0; j < dim_; ++j) row[j] = k_.sub(row[j], k_.mul(f, rows_[i][j]));
            for (std::size_t j = 0; j < combos_[i].size(); ++j) {
                combo[j] = k_.sub(combo[j], k_.mul(f, combos_[i][j]));
            }
        }
        std::size_t pivot = 0;
        while (pivot < dim_ && k_.is_zero(row[pivot])) ++pivot;
        if (pivot == dim_) {
            // combo . (v_0..v_n) = 0 with combo[n] = 1.
            Vector<R> out(n, k_.zero());
            for (std::size_t j = 0; j < n; ++j) out[j] = k_.neg(combo[j]);
            return out;
        }
        const auto inv = *k_.try_inverse(row[pivot]);
        for (auto& x : row) x = k_.mul(x, inv);
        for (auto& x : combo) x = k_.mul(x, inv);
        rows_.push_back(std::move(row));
        combos_.push_back(std::move(combo));
        pivots_.push_back(pivot);
        ++count_;
        return std::nullopt;
    }

    std::size_t rank() const noexcept { return rows_.size(); }

   private:
    const R& k_;
    std::size_t dim_;
    std::size_t count_ = 0;
    std::vector<Vector<R>> rows_;
    std::vector<Vector<R>> combos_;
    std::vector<std::size_t> pivots_;
};

}  // namespace stickel

#endif
