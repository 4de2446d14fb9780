#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gci/lattice.hpp"
#include "gci/matrix.hpp"

namespace gci {

/// Matrix over {-1, 0, +1}, usually the sign pattern of a lattice basis.
struct SignMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::int8_t> entries;  // row-major
    std::vector<std::string> row_labels, col_labels;  // optional

    SignMatrix() = default;
    SignMatrix(std::size_t rows_, std::size_t cols_);

    static SignMatrix of(const IntMatrix& m);

    int at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
    void set(std::size_t r, std::size_t c, int v);
};

/// Every row has at least one positive and one negative entry.
/// A matrix with zero rows is mixed by vacuity.
bool is_mixed(const SignMatrix& m);

/// Irreducibility of a sign pattern: mixed, s x t with 1 <= t <= s, and no
/// row/column permutation exposes a block split
///     [ N' B' ]
///     [ 0  D' ]
/// with N' mixed s' x t', t' <= s', and t - t' > s - s'.
///
/// Only column subsets T' are enumerated. For a fixed T', the top block must
/// contain every row with support in T' (the zero block forces them up) and
/// cannot contain any row without support there (such a row would make N'
/// unmixed), so R' = { rows supported on T' } is the unique viable witness.
/// The exhaustive split search over all (R', T') pairs is therefore
/// equivalent; tests check this against a brute-force oracle.
bool is_irreducible(const SignMatrix& m);

/// One irreducible component of the lattice basis ideal: the variables
/// forced to vanish plus the basis rows untouched by them. An empty
/// vanishing set is the toric component.
struct MinimalPrime {
    std::vector<CovVariable> vanishing_vars;  // sorted; empty = toric
    std::vector<std::size_t> residual_rows;   // 1-based statement indices

    bool toric() const { return vanishing_vars.empty(); }

    bool operator==(const MinimalPrime&) const = default;
};

struct PrimeSearchOptions {
    std::size_t column_cap = 24;  // subset search guard
};

/// Candidate column subsets for the minimal-prime search (the empty set is
/// included; it stands for the toric component). When every column of m has
/// at most 2 nonzeros, an irreducible block must be square with all its
/// columns at exactly 2 nonzeros, so only those columns enter the pool;
/// otherwise the pool is every column, guarded by the cap.
std::vector<std::vector<std::size_t>> candidate_column_sets(
    const IntMatrix& m, const PrimeSearchOptions& options = {});

/// Variable-level view of the candidate generator.
std::vector<std::vector<CovVariable>> candidate_variable_sets(
    const BasisMatrix& basis, const PrimeSearchOptions& options = {});

/// Nonempty column subsets S whose induced block N_S (rows meeting S,
/// restricted to S) is irreducible. No saturation gate; minimal_primes adds it.
std::vector<std::vector<std::size_t>> prime_support_sets(
    const IntMatrix& m, const PrimeSearchOptions& options = {});

/// Minimal primes of the lattice basis ideal: the toric component plus one
/// component per accepted variable set, sorted lexicographically.
/// Requires a saturated basis.
std::vector<MinimalPrime> minimal_primes(const BasisMatrix& basis,
                                         const PrimeSearchOptions& options = {});

}  // namespace gci
