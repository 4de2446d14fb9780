#pragma once

#include <map>
#include <vector>

#include "gci/ci.hpp"
#include "gci/covariable.hpp"
#include "gci/intlinalg.hpp"
#include "gci/matrix.hpp"

namespace gci {

/// Sparse integer vector over the covariance variables; zeros are absent.
using ExponentVector = std::map<CovVariable, int>;

void ev_add(ExponentVector& v, const CovVariable& var, int delta);
ExponentVector positive_part(const ExponentVector& v);
ExponentVector negative_part(const ExponentVector& v);

/// Exponent vector of sigma_rr sigma_pq - sigma_pr sigma_qr for a singleton
/// statement p _||_ q | r. Rejects anything non-singleton.
ExponentVector exponent_vector(const CIStatement& stmt, int n);

/// Rows of the binomial exponent vectors over the model's support variables.
///
/// Column order: diagonal variables first, ordered by first appearance as a
/// conditioning variable; then off-diagonal variables grouped by cyclic index
/// distance d = min((j-i) mod n, (i-j) mod n) and ordered inside each group
/// by the start index s of the pair (s, s+d mod n). For the cyclic model this
/// lays the matrix out as [identity | circulant | minus-identity], the form
/// in which M_n is usually displayed.
struct BasisMatrix {
    IntMatrix matrix;                       // k rows, one per statement
    std::vector<CovVariable> var_order;     // column labels
    std::vector<CovVariable> dropped_vars;  // universe variables with no support
    int n = 0;

    /// Number of off-diagonal-block boundaries, for display.
    std::vector<std::size_t> block_starts() const;
};

BasisMatrix basis_matrix(const CIModel& model);

/// Coordinates of v in the basis column order (zero where absent).
std::vector<Int> coordinates(const ExponentVector& v,
                             const std::vector<CovVariable>& var_order);

/// All Smith invariant factors equal 1, i.e. the row lattice is saturated.
bool is_saturated(const IntMatrix& m);
bool is_saturated(const BasisMatrix& basis);

}  // namespace gci
