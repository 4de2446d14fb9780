#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gci/matrix.hpp"

namespace gci {

/// A _||_ B | C with pairwise disjoint 1-based index sets, A and B nonempty.
/// Normal form: sets sorted ascending and min(A) < min(B), so the two
/// orientations of the same statement compare equal.
struct CIStatement {
    std::vector<int> a, b, c;

    CIStatement(std::vector<int> a_, std::vector<int> b_, std::vector<int> c_ = {});

    bool marginal() const { return c.empty(); }
    bool singleton() const { return a.size() == 1 && b.size() == 1 && c.size() == 1; }
    int max_index() const;

    /// "1 _||_ 2 | 3" or "1 _||_ 2"; round-trips through parse_statement.
    std::string str() const;

    auto operator<=>(const CIStatement&) const = default;
};

struct CIModel {
    int n = 0;
    std::vector<CIStatement> statements;

    CIModel(int n_, std::vector<CIStatement> statements_);
};

/// Exact Gaussian CI test: rank(sigma_{A u C, B u C}) <= #C. The rank form
/// needs no inversion, but the conditioning block must be nonsingular for
/// the statement to carry its distributional meaning, so that is enforced.
bool ci_holds(const SymMatrix& sigma, const CIStatement& stmt);

/// The cyclic family { i _||_ i+1 | i+2 : i = 1..n }, indices mod n. n >= 4.
CIModel cyclic_model(int n);

/// { i _||_ i+1 : i = 1..n } cyclically, the implied marginal statements.
std::vector<CIStatement> marginal_conclusions(int n);

/// True when the model's statements equal cyclic_model(model.n) as a multiset.
bool is_cyclic_model(const CIModel& model);

}  // namespace gci
