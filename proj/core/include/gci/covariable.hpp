#pragma once

#include <compare>
#include <string>

namespace gci {

/// One covariance indeterminate sigma_ij. (i,j) and (j,i) are the same
/// variable; the canonical form keeps i <= j. Indices are 1-based.
struct CovVariable {
    int i = 1, j = 1;

    CovVariable() = default;
    CovVariable(int i_, int j_);

    bool diagonal() const { return i == j; }

    /// ASCII form "s_i_j" with i <= j.
    std::string str() const;

    auto operator<=>(const CovVariable&) const = default;
};

}  // namespace gci
