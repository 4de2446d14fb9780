#include "gci/linalg.hpp"

#include <algorithm>
#include <set>

#include "gci/error.hpp"

namespace gci {

namespace {

using Grid = std::vector<std::vector<Int>>;

Int exact_div(const Int& a, const Int& b) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw Error(ErrorKind::Internal, "fraction-free division not exact");
    return q;
}

Grid to_grid(const IntMatrix& m) {
    Grid g(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) g[r][c] = m(r, c);
    return g;
}

// Clears denominators row by row; the accumulated scale divides the
// determinant back out at the end.
Grid to_scaled_grid(const RatMatrix& m, Int* scale) {
    Grid g(m.rows(), std::vector<Int>(m.cols()));
    if (scale) *scale = 1;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Int row_lcm = 1;
        for (std::size_t c = 0; c < m.cols(); ++c)
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(),
                    m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Int factor = exact_div(row_lcm, Int(m(r, c).get_den()));
            g[r][c] = Int(m(r, c).get_num()) * factor;
        }
        if (scale) *scale *= row_lcm;
    }
    return g;
}

Int bareiss_det(Grid m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = exact_div(t, prev);
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Int d = m[n - 1][n - 1];
    if (sign < 0) d = -d;
    return d;
}

// Fraction-free echelon with column pivot search; returns the pivot count.
// Entries stay integral: each stage's values are minors of the original
// matrix bordered by the pivot rows/columns actually used.
std::size_t bareiss_rank(Grid m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Int t = m[i][j] * m[r][c] - m[i][c] * m[r][j];
                m[i][j] = exact_div(t, prev);
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

void check_index_sets(const SymMatrix& sigma, const std::vector<int>& a,
                      const std::vector<int>& b, const std::vector<int>& c) {
    std::set<int> seen;
    for (const auto* part : {&a, &b, &c}) {
        for (int i : *part) {
            if (i < 1 || i > sigma.dim())
                throw Error(ErrorKind::Bounds,
                            "index " + std::to_string(i) + " outside 1.." +
                                std::to_string(sigma.dim()));
            if (!seen.insert(i).second)
                throw Error(ErrorKind::Disjoint,
                            "index " + std::to_string(i) + " repeated across A, B, C");
        }
    }
}

}  // namespace

Rational det(const RatMatrix& m) {
    if (m.rows() != m.cols())
        throw Error(ErrorKind::Dimension, "determinant of a non-square matrix");
    Int scale;
    Int d = bareiss_det(to_scaled_grid(m, &scale));
    Rational out(d, scale);
    out.canonicalize();
    return out;
}

Int det(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw Error(ErrorKind::Dimension, "determinant of a non-square matrix");
    return bareiss_det(to_grid(m));
}

std::size_t rank(const RatMatrix& m) { return bareiss_rank(to_scaled_grid(m, nullptr)); }

std::size_t rank(const IntMatrix& m) { return bareiss_rank(to_grid(m)); }

RatMatrix solve(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != a.cols())
        throw Error(ErrorKind::Dimension, "solve needs a square coefficient matrix");
    if (a.rows() != b.rows())
        throw Error(ErrorKind::Dimension, "solve shape mismatch");
    const std::size_t n = a.rows(), w = b.cols();
    RatMatrix aug(n, n + w);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        for (std::size_t c = 0; c < w; ++c) aug(r, n + c) = b(r, c);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && aug(pivot, k) == 0) ++pivot;
        if (pivot == n) throw Error(ErrorKind::Singular, "coefficient matrix is singular");
        if (pivot != k)
            for (std::size_t c = 0; c < n + w; ++c) std::swap(aug(pivot, c), aug(k, c));
        Rational inv = 1 / aug(k, k);
        for (std::size_t c = k; c < n + w; ++c) aug(k, c) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || aug(i, k) == 0) continue;
            Rational f = aug(i, k);
            for (std::size_t c = k; c < n + w; ++c) {
                Rational t = f * aug(k, c);
                aug(i, c) -= t;
            }
        }
    }
    RatMatrix x(n, w);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < w; ++c) x(r, c) = aug(r, n + c);
    return x;
}

RatMatrix schur_complement(const SymMatrix& sigma, const std::vector<int>& a,
                           const std::vector<int>& b, const std::vector<int>& c) {
    check_index_sets(sigma, a, b, c);
    RatMatrix s_ab = submatrix(sigma, a, b);
    if (c.empty()) return s_ab;
    RatMatrix s_cc = submatrix(sigma, c, c);
    RatMatrix s_cb = submatrix(sigma, c, b);
    RatMatrix s_ac = submatrix(sigma, a, c);
    RatMatrix x;
    try {
        x = solve(s_cc, s_cb);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Singular)
            throw Error(ErrorKind::Singular,
                        "conditioning block sigma_{C,C} is singular (sigma not "
                        "positive definite on C)");
        throw;
    }
    return s_ab - s_ac * x;
}

bool is_positive_definite(const SymMatrix& sigma) {
    std::vector<int> lead;
    lead.reserve(sigma.dim());
    for (int k = 1; k <= sigma.dim(); ++k) {
        lead.push_back(k);
        if (det(submatrix(sigma, lead, lead)) <= 0) return false;
    }
    return true;
}

bool is_diagonally_dominant(const SymMatrix& sigma) {
    for (int i = 1; i <= sigma.dim(); ++i) {
        Rational off(0);
        for (int j = 1; j <= sigma.dim(); ++j) {
            if (j == i) continue;
            off += abs(sigma.at(i, j));
        }
        if (sigma.at(i, i) <= off) return false;
    }
    return true;
}

}  // namespace gci
