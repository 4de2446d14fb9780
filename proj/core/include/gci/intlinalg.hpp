#pragma once

#include <optional>
#include <vector>

#include "gci/matrix.hpp"

namespace gci {

struct SmithNormalForm {
    IntMatrix diagonal;                  // same shape as the input, off-diagonal zero
    std::vector<Int> invariant_factors;  // nonzero diagonal entries, d1 | d2 | ...
};

/// Diagonalizes over the integers by unimodular row/column operations.
SmithNormalForm smith_normal_form(const IntMatrix& m);

/// Integer coefficients c with c * m = v, if any (Hermite-style row
/// elimination with a tracked transform). The row lattice is not assumed
/// saturated; divisibility failures mean "not in the lattice".
std::optional<std::vector<Int>> in_integer_row_span(const std::vector<Int>& v,
                                                    const IntMatrix& m);

}  // namespace gci
