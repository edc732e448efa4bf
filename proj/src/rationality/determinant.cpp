// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lz/rationality/determinant.hpp"

#include "lz/error.hpp"

#include <bit>
#include <cstdint>

namespace lz::rational {

namespace {

void require_square(const Matrix& m) {
    for (const auto& row : m) {
        if (row.size() != m.size())
            throw DomainError("invalid_argument", "determinant of a non-square matrix");
    }
}

} // namespace

Elem determinant_cofactor(const Ring& ring, const Matrix& m) {
    require_square(m);
    std::size_t n = m.size();
    if (n == 0)
        return ring.one();
    if (n > 20)
        throw DomainError("too_large", "cofactor expansion limited to 20x20");
    std::vector<Elem> dp(std::size_t(1) << n, ring.zero());
    dp[0] = ring.one();
    for (std::uint32_t mask = 0; mask + 1 < (1U << n); ++mask) {
        if (ring.is_zero(dp[mask]))
            continue;
        std::size_t row = static_cast<std::size_t>(std::popcount(mask));
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (1U << j))
                continue;
            const Elem& entry = m[row][j];
            if (ring.is_zero(entry))
                continue;
            // Columns already used that are larger than j form inversions.
            int inversions = std::popcount(mask >> (j + 1));
            Elem t = ring.mul(dp[mask], entry);
            std::uint32_t next = mask | (1U << j);
            dp[next] = (inversions % 2 == 0) ? ring.add(dp[next], t) : ring.sub(dp[next], t);
        }
    }
    return dp[(std::size_t(1) << n) - 1];
}

Elem determinant_bareiss(const Ring& ring, const Matrix& input) {
    require_square(input);
    if (!ring.is_domain())
        throw DomainError("not_a_domain", "fraction-free elimination needs an integral domain");
    Matrix m = input;
    std::size_t n = m.size();
    if (n == 0)
        return ring.one();
    bool negate = false;
    Elem prev = ring.one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (ring.is_zero(m[k][k])) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && ring.is_zero(m[swap_row][k]))
                ++swap_row;
            if (swap_row == n)
                return ring.zero();
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Elem num = ring.sub(ring.mul(m[i][j], m[k][k]), ring.mul(m[i][k], m[k][j]));
                auto q = ring.divide(num, prev);
                if (!q)
                    throw DomainError("inexact_division", "Bareiss step not exact");
                m[i][j] = std::move(*q);
            }
        }
        prev = m[k][k];
    }
    Elem d = m[n - 1][n - 1];
    return negate ? ring.neg(d) : d;
}

Elem determinant(const Ring& ring, const Matrix& m) {
    if (m.size() <= 5 || !ring.is_domain())
        return determinant_cofactor(ring, m);
    return determinant_bareiss(ring, m);
}

} // namespace lz::rational
