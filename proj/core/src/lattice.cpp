#include "gci/lattice.hpp"

#include <algorithm>
#include <set>

#include "gci/error.hpp"
#include "gci/linalg.hpp"

namespace gci {

void ev_add(ExponentVector& v, const CovVariable& var, int delta) {
    auto it = v.find(var);
    if (it == v.end()) {
        if (delta != 0) v.emplace(var, delta);
        return;
    }
    it->second += delta;
    if (it->second == 0) v.erase(it);
}

ExponentVector positive_part(const ExponentVector& v) {
    ExponentVector out;
    for (const auto& [var, e] : v)
        if (e > 0) out.emplace(var, e);
    return out;
}

ExponentVector negative_part(const ExponentVector& v) {
    ExponentVector out;
    for (const auto& [var, e] : v)
        if (e < 0) out.emplace(var, -e);
    return out;
}

ExponentVector exponent_vector(const CIStatement& stmt, int n) {
    if (!stmt.singleton())
        throw Error(ErrorKind::Scope,
                    "binomial exponent vectors exist only for singleton A, B, C; got \"" +
                        stmt.str() + "\"");
    if (stmt.max_index() > n)
        throw Error(ErrorKind::Bounds,
                    "statement \"" + stmt.str() + "\" exceeds n=" + std::to_string(n));
    const int p = stmt.a[0], q = stmt.b[0], r = stmt.c[0];
    ExponentVector v;
    ev_add(v, CovVariable(r, r), +1);
    ev_add(v, CovVariable(p, q), +1);
    ev_add(v, CovVariable(p, r), -1);
    ev_add(v, CovVariable(q, r), -1);
    return v;
}

namespace {

struct ColumnKey {
    int block;  // 0 = diagonal, else cyclic distance
    int start;

    auto operator<=>(const ColumnKey&) const = default;
};

ColumnKey column_key(const CovVariable& v, int n,
                     const std::map<CovVariable, int>& diag_rank) {
    if (v.diagonal()) return {0, diag_rank.at(v)};
    const int delta = v.j - v.i;
    const int d = std::min(delta, n - delta);
    // The pair is (s, s+d) cyclically; prefer the lower start when both fit.
    const int start = (delta <= n - delta) ? v.i : v.j;
    return {d, start};
}

}  // namespace

std::vector<std::size_t> BasisMatrix::block_starts() const {
    std::vector<std::size_t> starts;
    int prev_block = -1;
    for (std::size_t c = 0; c < var_order.size(); ++c) {
        const auto& v = var_order[c];
        int block = v.diagonal() ? 0 : std::min(v.j - v.i, n - (v.j - v.i));
        if (block != prev_block) {
            starts.push_back(c);
            prev_block = block;
        }
    }
    return starts;
}

BasisMatrix basis_matrix(const CIModel& model) {
    std::vector<ExponentVector> rows;
    rows.reserve(model.statements.size());
    std::map<CovVariable, int> diag_rank;  // first-appearance order of sigma_rr
    for (const auto& stmt : model.statements) {
        if (stmt.c.empty() || !stmt.singleton())
            throw Error(ErrorKind::Scope,
                        "lattice basis construction needs singleton A, B, C with "
                        "nonempty C; got \"" +
                            stmt.str() + "\"");
        rows.push_back(exponent_vector(stmt, model.n));
        CovVariable diag(stmt.c[0], stmt.c[0]);
        diag_rank.emplace(diag, static_cast<int>(diag_rank.size()));
    }

    std::set<CovVariable> support;
    for (const auto& row : rows)
        for (const auto& [var, e] : row) support.insert(var);
    for (const auto& v : support)
        if (v.diagonal()) diag_rank.emplace(v, static_cast<int>(diag_rank.size()));

    std::vector<CovVariable> order(support.begin(), support.end());
    std::sort(order.begin(), order.end(), [&](const CovVariable& x, const CovVariable& y) {
        return column_key(x, model.n, diag_rank) < column_key(y, model.n, diag_rank);
    });

    BasisMatrix out;
    out.n = model.n;
    out.var_order = order;
    out.matrix = IntMatrix(rows.size(), order.size());
    for (std::size_t c = 0; c < order.size(); ++c)
        out.matrix.col_labels().push_back(order[c].str());
    std::map<CovVariable, std::size_t> col_of;
    for (std::size_t c = 0; c < order.size(); ++c) col_of.emplace(order[c], c);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [var, e] : rows[r]) out.matrix(r, col_of.at(var)) = e;

    for (int i = 1; i <= model.n; ++i)
        for (int j = i; j <= model.n; ++j) {
            CovVariable v(i, j);
            if (!support.count(v)) out.dropped_vars.push_back(v);
        }

    if (rank(out.matrix) != out.matrix.rows())
        throw Error(ErrorKind::Basis, "exponent vectors are linearly dependent");
    return out;
}

std::vector<Int> coordinates(const ExponentVector& v,
                             const std::vector<CovVariable>& var_order) {
    std::vector<Int> out(var_order.size(), 0);
    ExponentVector rest = v;
    for (std::size_t c = 0; c < var_order.size(); ++c) {
        auto it = rest.find(var_order[c]);
        if (it != rest.end()) {
            out[c] = it->second;
            rest.erase(it);
        }
    }
    if (!rest.empty())
        throw Error(ErrorKind::Bounds, "exponent vector uses a variable outside the basis: " +
                                           rest.begin()->first.str());
    return out;
}

bool is_saturated(const IntMatrix& m) {
    for (const Int& d : smith_normal_form(m).invariant_factors)
        if (d != 1) return false;
    return true;
}

bool is_saturated(const BasisMatrix& basis) { return is_saturated(basis.matrix); }

}  // namespace gci
