#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gci/certificates.hpp"
#include "gci/ci.hpp"
#include "gci/lattice.hpp"
#include "gci/primes.hpp"

namespace gci {

struct StatementCheck {
    CIStatement statement;
    bool holds = false;
};

/// Exact record of which model statements and which conclusions hold on a
/// positive definite matrix, with the two witness classifications:
///   non-implication: every model statement holds, some conclusion fails;
///   sharpness: a strict subset of the model statements holds and no
///   conclusion holds.
struct WitnessReport {
    std::vector<StatementCheck> model_results;
    std::vector<StatementCheck> conclusion_results;
    bool all_statements_hold = false;
    bool any_conclusion_holds = false;
    bool non_implication_witness = false;
    bool sharpness_witness = false;
};

WitnessReport check_witness(const SymMatrix& sigma, const CIModel& model,
                            const std::vector<CIStatement>& conclusions);

struct DropOneWitness {
    int dropped_statement = 0;  // 1-based index into the cyclic model
    SymMatrix sigma;
    WitnessReport report;
};

/// One verified sharpness witness per cyclic statement: a positive definite
/// matrix with no zero entries that satisfies the other n-1 statements and
/// none of the marginal conclusions. Built by rotating the base family
/// through the model's cyclic symmetry.
std::vector<DropOneWitness> drop_one_suite(int n);

/// Full pipeline result. Implied statements are read off the variables that
/// vanish on every component not excluded from the positive definite cone.
struct ImplicationReport {
    CIModel model;
    BasisMatrix basis;
    std::vector<MinimalPrime> primes;
    std::vector<std::pair<MinimalPrime, ExclusionCertificate>> excluded;
    std::vector<CovVariable> surviving_vars;
    std::vector<CIStatement> implied;
    std::size_t evidence_samples = 0;
    bool toric_excluded = false;  // false => conclusions carry a caveat
    std::uint64_t seed = 0;
};

/// model -> lattice basis -> minimal primes -> PD exclusion -> implied
/// marginal independences. Exclusion certificates exist for the cyclic
/// family; for other models the toric component is reported as not excluded
/// and the conclusion set shrinks accordingly (never overstated).
/// `samples` seeded positive definite matrices are checked against each
/// certificate as supplementary evidence; the lattice part is exact.
ImplicationReport implied_marginals(const CIModel& model, std::size_t samples,
                                    std::uint64_t seed = 0);

}  // namespace gci
