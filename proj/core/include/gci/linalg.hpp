#pragma once

#include <cstddef>
#include <vector>

#include "gci/matrix.hpp"

namespace gci {

/// Exact determinant. Rows are scaled to integers and eliminated with the
/// Bareiss fraction-free scheme, so intermediate values stay integral instead
/// of accumulating gcd-normalization work on every entry.
Rational det(const RatMatrix& m);
Int det(const IntMatrix& m);

/// Exact rank via fraction-free row echelon with column pivoting.
std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Solves a * x = b exactly for square a. Throws ErrorKind::Singular.
RatMatrix solve(const RatMatrix& a, const RatMatrix& b);

/// sigma_{A,B} - sigma_{A,C} sigma_{C,C}^{-1} sigma_{C,B}, all exact.
/// a, b, c are 1-based pairwise disjoint index sets; c may be empty.
RatMatrix schur_complement(const SymMatrix& sigma, const std::vector<int>& a,
                           const std::vector<int>& b, const std::vector<int>& c);

/// Sylvester's criterion: all leading principal minors strictly positive.
bool is_positive_definite(const SymMatrix& sigma);

/// Strict row diagonal dominance: sigma_ii > sum_{j != i} |sigma_ij|.
bool is_diagonally_dominant(const SymMatrix& sigma);

}  // namespace gci
