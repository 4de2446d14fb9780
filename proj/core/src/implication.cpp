#include "gci/implication.hpp"

#include <algorithm>
#include <set>

#include "gci/error.hpp"
#include "gci/linalg.hpp"
#include "gci/sampling.hpp"

namespace gci {

WitnessReport check_witness(const SymMatrix& sigma, const CIModel& model,
                            const std::vector<CIStatement>& conclusions) {
    if (!is_positive_definite(sigma))
        throw Error(ErrorKind::NotPositiveDefinite,
                    "witness matrix is not positive definite");
    WitnessReport report;
    for (const auto& stmt : model.statements)
        report.model_results.push_back({stmt, ci_holds(sigma, stmt)});
    for (const auto& stmt : conclusions)
        report.conclusion_results.push_back({stmt, ci_holds(sigma, stmt)});
    report.all_statements_hold =
        std::all_of(report.model_results.begin(), report.model_results.end(),
                    [](const StatementCheck& s) { return s.holds; });
    report.any_conclusion_holds =
        std::any_of(report.conclusion_results.begin(), report.conclusion_results.end(),
                    [](const StatementCheck& s) { return s.holds; });
    report.non_implication_witness =
        report.all_statements_hold && !report.conclusion_results.empty() &&
        !std::all_of(report.conclusion_results.begin(), report.conclusion_results.end(),
                     [](const StatementCheck& s) { return s.holds; });
    report.sharpness_witness = !report.all_statements_hold && !report.any_conclusion_holds;
    return report;
}

std::vector<DropOneWitness> drop_one_suite(int n) {
    const CIModel model = cyclic_model(n);
    const auto conclusions = marginal_conclusions(n);
    const SymMatrix base = counterexample_sigma(n);

    std::vector<DropOneWitness> out;
    out.reserve(n);
    for (int k = 1; k <= n; ++k) {
        // The base family fails exactly statement n-1; shifting the labels by
        // k+1 moves the failure onto statement k.
        const int shift = (k + 1) % n;
        DropOneWitness w{k, cyclic_permute(base, shift), {}};
        w.report = check_witness(w.sigma, model, conclusions);

        std::size_t holding = 0;
        for (std::size_t s = 0; s < w.report.model_results.size(); ++s) {
            if (w.report.model_results[s].holds) ++holding;
            if (s + 1 == static_cast<std::size_t>(k) && w.report.model_results[s].holds)
                throw Error(ErrorKind::Internal,
                            "drop-one witness satisfies the dropped statement");
        }
        if (holding != static_cast<std::size_t>(n - 1) || w.report.any_conclusion_holds)
            throw Error(ErrorKind::Internal, "drop-one witness failed verification");
        if (!is_diagonally_dominant(w.sigma))
            throw Error(ErrorKind::Internal, "drop-one witness not diagonally dominant");
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                if (w.sigma.at(i, j) == 0)
                    throw Error(ErrorKind::Internal, "drop-one witness has a zero entry");
        out.push_back(std::move(w));
    }
    return out;
}

ImplicationReport implied_marginals(const CIModel& model, std::size_t samples,
                                    std::uint64_t seed) {
    ImplicationReport report{model, basis_matrix(model), {}, {}, {}, {}, 0, false, seed};
    report.primes = minimal_primes(report.basis);

    const bool cyclic = is_cyclic_model(model);
    std::set<std::size_t> excluded_idx;
    for (std::size_t p = 0; p < report.primes.size(); ++p) {
        if (!report.primes[p].toric()) continue;
        if (!cyclic) continue;  // no certificate family; leave unexcluded
        ExclusionCertificate cert = exclusion_certificate(model.n);
        Sampler sampler(seed);
        for (std::size_t s = 0; s < samples; ++s) {
            const SymMatrix sigma = sampler.random_pd(model.n);
            if (!certificate_violates_pd(cert, sigma))
                throw Error(ErrorKind::Internal,
                            "positive definite sample satisfied the excluded binomial");
        }
        report.evidence_samples = samples;
        report.toric_excluded = true;
        excluded_idx.insert(p);
        report.excluded.emplace_back(report.primes[p], std::move(cert));
    }

    // Variables vanishing on every non-excluded component.
    bool first = true;
    std::set<CovVariable> surviving;
    for (std::size_t p = 0; p < report.primes.size(); ++p) {
        if (excluded_idx.count(p)) continue;
        std::set<CovVariable> vars(report.primes[p].vanishing_vars.begin(),
                                   report.primes[p].vanishing_vars.end());
        if (first) {
            surviving = std::move(vars);
            first = false;
        } else {
            std::set<CovVariable> kept;
            for (const auto& v : surviving)
                if (vars.count(v)) kept.insert(v);
            surviving = std::move(kept);
        }
    }
    if (first)
        throw Error(ErrorKind::Internal, "every component was excluded");

    report.surviving_vars.assign(surviving.begin(), surviving.end());
    for (const auto& v : report.surviving_vars)
        if (!v.diagonal())
            report.implied.emplace_back(std::vector<int>{v.i}, std::vector<int>{v.j});
    return report;
}

}  // namespace gci
