#include "gci/intlinalg.hpp"

#include <algorithm>

#include "gci/error.hpp"

namespace gci {

namespace {

using Grid = std::vector<std::vector<Int>>;

Grid to_grid(const IntMatrix& m) {
    Grid g(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) g[r][c] = m(r, c);
    return g;
}

void add_row(Grid& g, std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t c = 0; c < g[dst].size(); ++c) g[dst][c] += factor * g[src][c];
}

void add_col(Grid& g, std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t r = 0; r < g.size(); ++r) g[r][dst] += factor * g[r][src];
}

bool isolated(const Grid& g, std::size_t s) {
    for (std::size_t i = s + 1; i < g.size(); ++i)
        if (g[i][s] != 0) return false;
    for (std::size_t j = s + 1; j < g[0].size(); ++j)
        if (g[s][j] != 0) return false;
    return true;
}

// Smallest nonzero |entry| in the lower-right block starting at (s, s).
bool locate_min(const Grid& g, std::size_t s, std::size_t& ir, std::size_t& ic) {
    bool found = false;
    Int best;
    for (std::size_t i = s; i < g.size(); ++i)
        for (std::size_t j = s; j < g[0].size(); ++j) {
            if (g[i][j] == 0) continue;
            Int a = abs(g[i][j]);
            if (!found || a < best) {
                found = true;
                best = a;
                ir = i;
                ic = j;
            }
        }
    return found;
}

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithNormalForm out;
    out.diagonal = IntMatrix(rows, cols);
    if (rows == 0 || cols == 0) return out;

    Grid g = to_grid(m);
    const std::size_t steps = std::min(rows, cols);
    for (std::size_t s = 0; s < steps; ++s) {
        std::size_t ir = s, ic = s;
        if (!locate_min(g, s, ir, ic)) break;  // remaining block is zero
        while (true) {
            locate_min(g, s, ir, ic);
            std::swap(g[s], g[ir]);
            for (std::size_t r = 0; r < rows; ++r) std::swap(g[r][s], g[r][ic]);
            bool reduced = false;
            for (std::size_t i = s + 1; i < rows; ++i)
                if (g[i][s] != 0) {
                    Int q = g[i][s] / g[s][s];  // truncated quotient
                    add_row(g, i, s, -q);
                    if (g[i][s] != 0) reduced = true;
                }
            for (std::size_t j = s + 1; j < cols; ++j)
                if (g[s][j] != 0) {
                    Int q = g[s][j] / g[s][s];
                    add_col(g, j, s, -q);
                    if (g[s][j] != 0) reduced = true;
                }
            if (reduced) continue;
            if (!isolated(g, s)) continue;
            // Pivot isolated; repair the divisibility chain if needed.
            bool chain_ok = true;
            for (std::size_t i = s + 1; i < rows && chain_ok; ++i)
                for (std::size_t j = s + 1; j < cols && chain_ok; ++j)
                    if (g[i][j] % g[s][s] != 0) {
                        add_row(g, s, i, 1);
                        chain_ok = false;
                    }
            if (chain_ok) break;
        }
        if (g[s][s] < 0)
            for (std::size_t j = s; j < cols; ++j) g[s][j] = -g[s][j];
    }

    for (std::size_t s = 0; s < steps; ++s) {
        out.diagonal(s, s) = g[s][s];
        if (g[s][s] != 0) out.invariant_factors.push_back(g[s][s]);
    }
    return out;
}

std::optional<std::vector<Int>> in_integer_row_span(const std::vector<Int>& v,
                                                    const IntMatrix& m) {
    if (v.size() != m.cols())
        throw Error(ErrorKind::Dimension, "vector length does not match column count");
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0) {
        for (const Int& x : v)
            if (x != 0) return std::nullopt;
        return std::vector<Int>{};
    }

    // Row Hermite elimination h = u * m with u unimodular.
    Grid h = to_grid(m);
    Grid u(rows, std::vector<Int>(rows, 0));
    for (std::size_t i = 0; i < rows; ++i) u[i][i] = 1;

    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Gcd loop: leave a single nonzero at (r, c) among rows r..end.
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (h[i][c] != 0 && (best == rows || abs(h[i][c]) < abs(h[best][c])))
                    best = i;
            if (best == rows) break;
            std::swap(h[best], h[r]);
            std::swap(u[best], u[r]);
            bool more = false;
            for (std::size_t i = r + 1; i < rows; ++i)
                if (h[i][c] != 0) {
                    Int q = h[i][c] / h[r][c];
                    add_row(h, i, r, -q);
                    add_row(u, i, r, -q);
                    if (h[i][c] != 0) more = true;
                }
            if (!more) break;
        }
        if (h[r][c] == 0) continue;
        if (h[r][c] < 0) {
            for (auto& x : h[r]) x = -x;
            for (auto& x : u[r]) x = -x;
        }
        pivots.emplace_back(r, c);
        ++r;
    }

    // Greedy back-substitution of v against the echelon rows.
    std::vector<Int> w = v;
    std::vector<Int> coeff(rows, 0);
    for (auto [pr, pc] : pivots) {
        if (w[pc] % h[pr][pc] != 0) return std::nullopt;
        Int q = w[pc] / h[pr][pc];
        coeff[pr] = q;
        for (std::size_t c = 0; c < cols; ++c) w[c] -= q * h[pr][c];
    }
    for (const Int& x : w)
        if (x != 0) return std::nullopt;

    // coeff * h = v and h = u * m, so the answer is coeff * u.
    std::vector<Int> out(rows, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        if (coeff[i] == 0) continue;
        for (std::size_t j = 0; j < rows; ++j) out[j] += coeff[i] * u[i][j];
    }
    return out;
}

}  // namespace gci
