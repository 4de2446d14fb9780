#include "gci/polynomials.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "gci/error.hpp"

namespace gci {

CovVariable::CovVariable(int i_, int j_) : i(i_), j(j_) {
    if (i < 1 || j < 1) throw Error(ErrorKind::Bounds, "variable indices must be positive");
    if (i > j) std::swap(i, j);
}

std::string CovVariable::str() const {
    return "s_" + std::to_string(i) + "_" + std::to_string(j);
}

int Monomial::diagonal_count() const {
    int d = 0;
    for (const auto& v : vars)
        if (v.diagonal()) ++d;
    return d;
}

std::string Monomial::str() const {
    if (vars.empty()) return "1";
    // Display convention: diagonal factors lead, as in sigma_cc sigma_ab.
    std::vector<CovVariable> ordered;
    ordered.reserve(vars.size());
    for (const auto& v : vars)
        if (v.diagonal()) ordered.push_back(v);
    for (const auto& v : vars)
        if (!v.diagonal()) ordered.push_back(v);
    std::string out;
    for (std::size_t k = 0; k < ordered.size();) {
        std::size_t run = k;
        while (run < ordered.size() && ordered[run] == ordered[k]) ++run;
        if (!out.empty()) out += "*";
        out += ordered[k].str();
        if (run - k > 1) out += "^" + std::to_string(run - k);
        k = run;
    }
    return out;
}

std::string Polynomial::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const auto& t = terms[k];
        const std::int64_t mag = t.coeff < 0 ? -t.coeff : t.coeff;
        if (k == 0)
            out += (t.coeff < 0) ? "-" : "";
        else
            out += (t.coeff < 0) ? " - " : " + ";
        if (mag != 1) out += std::to_string(mag) + "*";
        out += t.monomial.str();
    }
    return out;
}

Rational evaluate(const Polynomial& p, const SymMatrix& sigma) {
    Rational total(0);
    for (const auto& t : p.terms) {
        Rational prod(t.coeff);
        for (const auto& v : t.monomial.vars) prod *= sigma.at(v.i, v.j);
        total += prod;
    }
    return total;
}

namespace {

// Display order: terms with more diagonal factors first, lexicographic after.
bool term_order(const Term& x, const Term& y) {
    const int dx = x.monomial.diagonal_count(), dy = y.monomial.diagonal_count();
    if (dx != dy) return dx > dy;
    return x.monomial < y.monomial;
}

Polynomial expand_minor(const std::vector<int>& rows, const std::vector<int>& cols) {
    const std::size_t m = rows.size();
    if (m > 8)
        throw Error(ErrorKind::Search,
                    "minor expansion beyond 8x8 is not supported (" + std::to_string(m) +
                        "! terms)");
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::map<Monomial, std::int64_t> acc;
    do {
        // Parity by inversion count.
        int inversions = 0;
        for (std::size_t x = 0; x < m; ++x)
            for (std::size_t y = x + 1; y < m; ++y)
                if (perm[x] > perm[y]) ++inversions;
        Monomial mono;
        mono.vars.reserve(m);
        for (std::size_t x = 0; x < m; ++x)
            mono.vars.emplace_back(rows[x], cols[perm[x]]);
        std::sort(mono.vars.begin(), mono.vars.end());
        acc[mono] += (inversions % 2 == 0) ? 1 : -1;
    } while (std::next_permutation(perm.begin(), perm.end()));

    Polynomial p;
    for (auto& [mono, coeff] : acc)
        if (coeff != 0) p.terms.push_back(Term{coeff, mono});
    std::sort(p.terms.begin(), p.terms.end(), term_order);
    if (!p.terms.empty() && p.terms.front().coeff < 0)
        for (auto& t : p.terms) t.coeff = -t.coeff;
    return p;
}

void combinations(std::size_t total, std::size_t choose,
                  const std::function<void(const std::vector<std::size_t>&)>& emit) {
    std::vector<std::size_t> idx(choose);
    std::iota(idx.begin(), idx.end(), 0);
    if (choose > total) return;
    while (true) {
        emit(idx);
        std::size_t k = choose;
        while (k > 0 && idx[k - 1] == total - choose + (k - 1)) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t t = k; t < choose; ++t) idx[t] = idx[t - 1] + 1;
    }
}

}  // namespace

std::vector<Polynomial> minor_generators(const CIModel& model) {
    std::vector<Polynomial> out;
    for (const auto& stmt : model.statements) {
        std::vector<int> row_pool = stmt.a, col_pool = stmt.b;
        row_pool.insert(row_pool.end(), stmt.c.begin(), stmt.c.end());
        col_pool.insert(col_pool.end(), stmt.c.begin(), stmt.c.end());
        std::sort(row_pool.begin(), row_pool.end());
        std::sort(col_pool.begin(), col_pool.end());
        const std::size_t size = stmt.c.size() + 1;

        std::vector<Polynomial> minors;
        combinations(row_pool.size(), size, [&](const std::vector<std::size_t>& ri) {
            std::vector<int> rows;
            for (auto k : ri) rows.push_back(row_pool[k]);
            combinations(col_pool.size(), size, [&](const std::vector<std::size_t>& ci) {
                std::vector<int> cols;
                for (auto k : ci) cols.push_back(col_pool[k]);
                minors.push_back(expand_minor(rows, cols));
            });
        });
        for (std::size_t k = 0; k < minors.size(); ++k) {
            minors[k].label = stmt.str();
            if (minors.size() > 1) minors[k].label += " #" + std::to_string(k + 1);
            out.push_back(std::move(minors[k]));
        }
    }
    return out;
}

}  // namespace gci
