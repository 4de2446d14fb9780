#pragma once

#include <vector>

#include "gci/covariable.hpp"
#include "gci/lattice.hpp"
#include "gci/matrix.hpp"

namespace gci {

/// Entrywise product; positive definiteness is closed under it.
SymMatrix hadamard(const SymMatrix& a, const SymMatrix& b);

/// Simultaneous row/column relabeling by the k-th power of the cycle
/// (1 2 ... n): entry (i,j) of the result is sigma at (i-k, j-k) mod n.
SymMatrix cyclic_permute(const SymMatrix& sigma, int k);

/// sigma * pi(sigma) * ... * pi^{n-1}(sigma); every entry of the result is a
/// product of n entries of sigma taken around the cycle.
SymMatrix cyclic_hadamard_power(const SymMatrix& sigma);

/// Machine-checkable witness that the toric component of the cyclic model
/// misses the positive definite cone. The binomial
///     prod_i sigma_ii - prod_i sigma_{i-2,i}
/// lies in the toric ideal (its exponent vector is the all-ones combination
/// of the basis rows), while every positive definite matrix satisfies the
/// strict inequality (prod sigma_ii)^2 > (prod sigma_{i-2,i})^2.
struct ExclusionCertificate {
    int n = 0;
    std::vector<Int> lattice_coeffs;             // all ones, length n
    ExponentVector binomial;                     // sum e_ii - sum e_{i-2,i}
    std::vector<CovVariable> positive_product_vars;  // sigma_ii, i = 1..n
    std::vector<CovVariable> negative_product_vars;  // sigma_{i-2,i}, with multiplicity
};

/// Builds and verifies the certificate for the cyclic model of size n >= 4.
/// Both verifications (lattice membership with all-ones coefficients, and
/// the binomial's closed form) are exact; failure would be an internal bug.
ExclusionCertificate exclusion_certificate(int n);

/// Exact evaluation of (prod sigma_ii)^2 > (prod sigma_{i-2,i})^2.
/// True for every positive definite sigma; the all-ones matrix shows the
/// inequality can collapse to equality outside the cone.
bool certificate_violates_pd(const ExclusionCertificate& cert, const SymMatrix& sigma);

/// The diagonally dominant sharpness family: unit diagonal,
/// sigma_{i-1,i} = a^{n-i+1} cyclically (so sigma_{1,n} = a^n),
/// sigma_{i-2,i} = a, everything else e. For 0 < a, e < 1/n it is positive
/// definite, has no zero entries, and satisfies every cyclic statement
/// except statement n-1 (the one conditioned on X_1).
SymMatrix counterexample_sigma(int n, const Rational& a, const Rational& e);

/// Defaults a = 1/(2n), e = 1/(4n).
SymMatrix counterexample_sigma(int n);

}  // namespace gci
