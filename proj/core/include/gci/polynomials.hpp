#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gci/ci.hpp"
#include "gci/covariable.hpp"

namespace gci {

/// Product of covariance variables; repeats encode exponents.
struct Monomial {
    std::vector<CovVariable> vars;  // sorted

    int diagonal_count() const;
    std::string str() const;

    auto operator<=>(const Monomial&) const = default;
};

struct Term {
    std::int64_t coeff = 0;
    Monomial monomial;

    auto operator<=>(const Term&) const = default;
};

/// Formal signed sum of monomials in the sigma_ij. Terms are kept in display
/// order (more diagonal factors first, then lexicographic) with the leading
/// coefficient positive, matching the orientation sigma_cc sigma_ab -
/// sigma_ac sigma_bc of the binomial generators.
struct Polynomial {
    std::string label;
    std::vector<Term> terms;

    std::string str() const;

    bool operator==(const Polynomial& other) const { return terms == other.terms; }
};

/// Evaluates exactly at a concrete covariance matrix.
Rational evaluate(const Polynomial& p, const SymMatrix& sigma);

/// All (#C+1) x (#C+1) minors of sigma_{A u C, B u C} per statement, as
/// formal polynomials. Singleton statements yield the single binomial
/// sigma_cc sigma_ab - sigma_ac sigma_bc.
std::vector<Polynomial> minor_generators(const CIModel& model);

}  // namespace gci
