#include "gci/ci.hpp"

#include <algorithm>
#include <set>

#include "gci/error.hpp"
#include "gci/linalg.hpp"

namespace gci {

namespace {

std::vector<int> sorted_unique(std::vector<int> v, const char* name) {
    std::sort(v.begin(), v.end());
    for (std::size_t k = 0; k + 1 < v.size(); ++k)
        if (v[k] == v[k + 1])
            throw Error(ErrorKind::Disjoint, std::string("index ") + std::to_string(v[k]) +
                                                 " repeated inside set " + name);
    if (!v.empty() && v.front() < 1)
        throw Error(ErrorKind::Bounds, "indices must be positive");
    return v;
}

std::string join(const std::vector<int>& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(v[k]);
    }
    return out;
}

int wrap(int i, int n) { return (i - 1) % n + 1; }

}  // namespace

CIStatement::CIStatement(std::vector<int> a_, std::vector<int> b_, std::vector<int> c_)
    : a(sorted_unique(std::move(a_), "A")),
      b(sorted_unique(std::move(b_), "B")),
      c(sorted_unique(std::move(c_), "C")) {
    if (a.empty() || b.empty())
        throw Error(ErrorKind::Parameter, "A and B must be nonempty");
    std::set<int> seen(a.begin(), a.end());
    for (int i : b)
        if (!seen.insert(i).second)
            throw Error(ErrorKind::Disjoint, "index " + std::to_string(i) +
                                                 " appears in more than one of A, B, C");
    for (int i : c)
        if (!seen.insert(i).second)
            throw Error(ErrorKind::Disjoint, "index " + std::to_string(i) +
                                                 " appears in more than one of A, B, C");
    if (b.front() < a.front()) std::swap(a, b);
}

int CIStatement::max_index() const {
    int m = 0;
    for (const auto* part : {&a, &b, &c})
        for (int i : *part) m = std::max(m, i);
    return m;
}

std::string CIStatement::str() const {
    std::string out = join(a) + " _||_ " + join(b);
    if (!c.empty()) out += " | " + join(c);
    return out;
}

CIModel::CIModel(int n_, std::vector<CIStatement> statements_)
    : n(n_), statements(std::move(statements_)) {
    if (n < 1) throw Error(ErrorKind::Parameter, "model size must be >= 1");
    for (const auto& s : statements)
        if (s.max_index() > n)
            throw Error(ErrorKind::Bounds, "statement \"" + s.str() +
                                               "\" uses an index beyond n=" +
                                               std::to_string(n));
}

bool ci_holds(const SymMatrix& sigma, const CIStatement& stmt) {
    if (stmt.max_index() > sigma.dim())
        throw Error(ErrorKind::Bounds, "statement \"" + stmt.str() +
                                           "\" uses an index beyond the matrix dimension " +
                                           std::to_string(sigma.dim()));
    if (!stmt.c.empty() && det(submatrix(sigma, stmt.c, stmt.c)) == 0)
        throw Error(ErrorKind::Singular,
                    "conditioning block sigma_{C,C} is singular for \"" + stmt.str() + "\"");
    std::vector<int> rows = stmt.a, cols = stmt.b;
    rows.insert(rows.end(), stmt.c.begin(), stmt.c.end());
    cols.insert(cols.end(), stmt.c.begin(), stmt.c.end());
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    return rank(submatrix(sigma, rows, cols)) <= stmt.c.size();
}

CIModel cyclic_model(int n) {
    if (n < 4)
        throw Error(ErrorKind::Size,
                    "the cyclic family needs n >= 4, got n=" + std::to_string(n));
    std::vector<CIStatement> stmts;
    stmts.reserve(n);
    for (int i = 1; i <= n; ++i)
        stmts.emplace_back(std::vector<int>{i}, std::vector<int>{wrap(i + 1, n)},
                           std::vector<int>{wrap(i + 2, n)});
    return CIModel(n, std::move(stmts));
}

std::vector<CIStatement> marginal_conclusions(int n) {
    if (n < 4)
        throw Error(ErrorKind::Size,
                    "the cyclic family needs n >= 4, got n=" + std::to_string(n));
    std::vector<CIStatement> out;
    out.reserve(n);
    for (int i = 1; i <= n; ++i)
        out.emplace_back(std::vector<int>{i}, std::vector<int>{wrap(i + 1, n)});
    return out;
}

bool is_cyclic_model(const CIModel& model) {
    if (model.n < 4) return false;
    if (model.statements.size() != static_cast<std::size_t>(model.n)) return false;
    auto expected = cyclic_model(model.n).statements;
    auto got = model.statements;
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    return expected == got;
}

}  // namespace gci
