#pragma once

#include <initializer_list>
#include <vector>

#include "gci/error.hpp"
#include "gci/linalg.hpp"
#include "gci/matrix.hpp"
#include "gci/rational.hpp"
#include "gci/sampling.hpp"

namespace gci::test {

inline Rational q(long num, long den = 1) { return rational(num, den); }

inline RatMatrix rat_matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    RatMatrix m(rows.size(), rows.begin()->size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (const auto& value : row) m(r, c++) = value;
        ++r;
    }
    return m;
}

inline IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    IntMatrix m(rows.size(), rows.begin()->size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (long value : row) m(r, c++) = value;
        ++r;
    }
    return m;
}

inline SymMatrix sym(std::initializer_list<std::initializer_list<Rational>> rows) {
    const int n = static_cast<int>(rows.size());
    SymMatrix m(n);
    int i = 1;
    for (const auto& row : rows) {
        int j = 1;
        for (const auto& value : row) {
            if (j >= i) m.set(i, j, value);
            ++j;
        }
        ++i;
    }
    return m;
}

/// Test-only determinant oracle: recursive cofactor expansion along the
/// first row. Independent of the Bareiss path under test.
inline Rational cofactor_det(const RatMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m(0, 0);
    Rational total(0);
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == 0) continue;
        RatMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == c) continue;
                minor(r - 1, cc++) = m(r, k);
            }
        }
        Rational term = m(0, c) * cofactor_det(minor);
        if (c % 2 == 1) term = -term;
        total += term;
    }
    return total;
}

inline RatMatrix random_int_matrix(Sampler& s, std::size_t rows, std::size_t cols,
                                   long bound = 4) {
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(s.next_int(-bound, bound));
    return m;
}

inline RatMatrix random_rational_matrix(Sampler& s, std::size_t rows, std::size_t cols) {
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rational(s.next_int(-6, 6), s.next_int(1, 5));
    return m;
}

inline SymMatrix random_symmetric_rational(Sampler& s, int n) {
    SymMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            m.set(i, j, rational(s.next_int(-6, 6), s.next_int(1, 5)));
    return m;
}

}  // namespace gci::test
