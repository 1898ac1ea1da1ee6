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

#ifndef STICKEL_DETERMINANT_HPP
#define STICKEL_DETERMINANT_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "stickel/error.hpp"
#include "stickel/ring.hpp"

namespace stickel {

template <class R>
using Matrix = std::vector<std::vector<typename R::Element>>;

/// Largest order handled by the cofactor fallback (its cost is n * 2^n).
inline constexpr std::size_t kCofactorLimit = 22;

/// Exact cofactor (Laplace) expansion with memoized minors. Division-free, so
/// valid over any commutative ring.
template <CoefficientRing R>
typename R::Element determinant_cofactor(const R& ring, const Matrix<R>& m) {
    const std::size_t n = m.size();
    if (n == 0) return ring.one();
    if (n > kCofactorLimit) {
        throw ZeroDivisorEncountered("cofactor fallback refused for order " + std::to_string(n));
    }
    // partial[mask] sums signed products choosing the rows in mask for the
    // first popcount(mask) columns.
    std::vector<typename R::Element> partial(std::size_t{1} << n, ring.zero());
    partial[0] = ring.one();
    for (std::uint32_t mask = 0; mask + 1 < (std::uint32_t{1} << n); ++mask) {
        if (ring.is_zero(partial[mask])) continue;
        const std::size_t col = static_cast<std::size_t>(std::popcount(mask));
        for (std::size_t row = 0; row < n; ++row) {
            if (mask & (std::uint32_t{1} << row)) continue;
            if (ring.is_zero(m[row][col])) continue;
            const std::uint32_t above = mask & ~((std::uint32_t{2} << row) - 1);
            auto term = ring.mul(partial[mask], m[row][col]);
            if (std::popcount(above) % 2 == 1) term = ring.neg(term);
            auto& slot = partial[mask | (std::uint32_t{1} << row)];
            slot = ring.add(slot, term);
        }
    }
    return partial.back();
}

/**
 * Determinant of a square matrix.
 *
 * Over a field: Gaussian elimination with division. Otherwise fraction-free
 * Bareiss elimination restricted to unit pivots, so each exact division is a
 * multiplication by an inverse; a column whose nonzero candidates are all zero
 * divisors sends the whole computation to the cofactor fallback.
 */
template <CoefficientRing R>
typename R::Element determinant(const R& ring, Matrix<R> m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw DimensionMismatch("determinant of a non-square matrix");
    }
    if (n == 0) return ring.one();
    bool negate = false;

    if constexpr (R::is_field) {
        auto det = ring.one();
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t pivot = k;
            while (pivot < n && ring.is_zero(m[pivot][k])) ++pivot;
            if (pivot == n) return ring.zero();
            if (pivot != k) {
                std::swap(m[pivot], m[k]);
                negate = !negate;
            }
            det = ring.mul(det, m[k][k]);
            const auto inv = *ring.try_inverse(m[k][k]);
            for (std::size_t i = k + 1; i < n; ++i) {
                if (ring.is_zero(m[i][k])) continue;
                const auto factor = ring.mul(m[i][k], inv);
                for (std::size_t j = k + 1; j < n; ++j) {
                    m[i][j] = ring.sub(m[i][j], ring.mul(factor, m[k][j]));
                }
            }
        }
        return negate ? ring.neg(det) : det;
    } else {
        const Matrix<R> original = m;
        auto prev_inverse = ring.one();
        for (std::size_t k = 0; k + 1 < n; ++k) {
            std::size_t pivot = n;
            bool any_nonzero = false;
            for (std::size_t i = k; i < n; ++i) {
                if (ring.is_zero(m[i][k])) continue;
                any_nonzero = true;
                if (ring.try_inverse(m[i][k])) {
                    pivot = i;
                    break;
                }
            }
            if (!any_nonzero) return ring.zero();
            if (pivot == n) return determinant_cofactor(ring, original);
            if (pivot != k) {
                std::swap(m[pivot], m[k]);
                negate = !negate;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) {
                    auto num = ring.sub(ring.mul(m[k][k], m[i][j]), ring.mul(m[i][k], m[k][j]));
                    m[i][j] = ring.mul(num, prev_inverse);
                }
            }
            prev_inverse = *ring.try_inverse(m[k][k]);
        }
        const auto& det = m[n - 1][n - 1];
        return negate ? ring.neg(det) : det;
    }
}

}  // namespace stickel

#endif
