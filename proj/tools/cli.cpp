#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gci/certificates.hpp"
#include "gci/error.hpp"
#include "gci/implication.hpp"
#include "gci/io.hpp"
#include "gci/linalg.hpp"

namespace gci::cli {

namespace {

using nlohmann::json;

std::uint64_t env_seed() {
    const char* raw = std::getenv("GCI_SEED");
    if (raw == nullptr || *raw == '\0') return 0;
    std::string s(raw);
    if (s.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorKind::Parameter, "GCI_SEED must be a decimal integer, got \"" + s + "\"");
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw Error(ErrorKind::Parameter, "GCI_SEED out of range: \"" + s + "\"");
    }
}

std::string product_str(const std::vector<CovVariable>& vars) {
    std::vector<CovVariable> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    std::string out;
    for (std::size_t k = 0; k < sorted.size();) {
        std::size_t run = k;
        while (run < sorted.size() && sorted[run] == sorted[k]) ++run;
        if (!out.empty()) out += "*";
        out += sorted[k].str();
        if (run - k > 1) out += "^" + std::to_string(run - k);
        k = run;
    }
    return out.empty() ? "1" : out;
}

std::string var_set_str(const std::vector<CovVariable>& vars) {
    if (vars.empty()) return "{}";
    std::string out = "{ ";
    for (std::size_t k = 0; k < vars.size(); ++k) {
        if (k) out += " ";
        out += vars[k].str();
    }
    return out + " }";
}

json vars_json(const std::vector<CovVariable>& vars) {
    json arr = json::array();
    for (const auto& v : vars) arr.push_back(v.str());
    return arr;
}

json prime_json(const MinimalPrime& prime) {
    json j;
    j["toric"] = prime.toric();
    j["vars"] = vars_json(prime.vanishing_vars);
    j["residual_rows"] = prime.residual_rows;
    return j;
}

json certificate_json(const ExclusionCertificate& cert) {
    json j;
    j["n"] = cert.n;
    json coeffs = json::array();
    for (const auto& c : cert.lattice_coeffs) coeffs.push_back(to_string(c));
    j["lattice_coeffs"] = coeffs;
    j["binomial"] = product_str(cert.positive_product_vars) + " - " +
                    product_str(cert.negative_product_vars);
    j["positive_product_vars"] = vars_json(cert.positive_product_vars);
    j["negative_product_vars"] = vars_json(cert.negative_product_vars);
    return j;
}

void print_prime(std::ostream& out, std::size_t index, const MinimalPrime& prime) {
    out << "  component " << index + 1 << ": ";
    if (prime.toric())
        out << "toric (S = {})";
    else
        out << "S = " << var_set_str(prime.vanishing_vars);
    out << ", residual rows:";
    if (prime.residual_rows.empty())
        out << " none";
    else
        for (auto r : prime.residual_rows) out << " " << r;
    out << "\n";
}

void print_matrix(std::ostream& out, const SymMatrix& sigma) {
    std::vector<std::vector<std::string>> cells(sigma.dim());
    std::size_t width = 0;
    for (int i = 1; i <= sigma.dim(); ++i)
        for (int j = 1; j <= sigma.dim(); ++j) {
            cells[i - 1].push_back(to_string(sigma.at(i, j)));
            width = std::max(width, cells[i - 1].back().size());
        }
    for (const auto& row : cells) {
        out << " ";
        for (const auto& cell : row)
            out << " " << std::setw(static_cast<int>(width)) << cell;
        out << "\n";
    }
}

json statements_json(const std::vector<CIStatement>& stmts) {
    json arr = json::array();
    for (const auto& s : stmts) arr.push_back(s.str());
    return arr;
}

json witness_json(const WitnessReport& report) {
    json j;
    json model = json::array();
    for (const auto& r : report.model_results)
        model.push_back({{"statement", r.statement.str()}, {"holds", r.holds}});
    json concl = json::array();
    for (const auto& r : report.conclusion_results)
        concl.push_back({{"statement", r.statement.str()}, {"holds", r.holds}});
    j["model_results"] = model;
    j["conclusion_results"] = concl;
    j["all_statements_hold"] = report.all_statements_hold;
    j["any_conclusion_holds"] = report.any_conclusion_holds;
    j["non_implication_witness"] = report.non_implication_witness;
    j["sharpness_witness"] = report.sharpness_witness;
    return j;
}

void print_witness(std::ostream& out, const WitnessReport& report) {
    out << "model statements:\n";
    for (const auto& r : report.model_results)
        out << "  " << r.statement.str() << ": " << (r.holds ? "HOLDS" : "FAILS") << "\n";
    out << "conclusions:\n";
    for (const auto& r : report.conclusion_results)
        out << "  " << r.statement.str() << ": " << (r.holds ? "HOLDS" : "FAILS") << "\n";
    out << "classification: ";
    if (report.non_implication_witness)
        out << "non-implication witness (all statements hold, a conclusion fails)\n";
    else if (report.sharpness_witness)
        out << "sharpness witness (a strict subset of statements holds, no conclusion holds)\n";
    else if (report.all_statements_hold)
        out << "consistent (all statements and all conclusions hold)\n";
    else
        out << "neither (some statements fail, some conclusions hold)\n";
}

int cmd_basis(std::ostream& out, int n) {
    const BasisMatrix basis = basis_matrix(cyclic_model(n));
    const auto starts = basis.block_starts();
    auto block_of = [&](std::size_t c) {
        std::size_t b = 0;
        for (std::size_t s = 0; s < starts.size(); ++s)
            if (c >= starts[s]) b = s;
        return b;
    };
    out << "# lattice basis M_" << n << ": " << basis.matrix.rows() << " rows, "
        << basis.matrix.cols() << " columns\n";
    out << "# columns:";
    for (std::size_t c = 0; c < basis.var_order.size(); ++c) {
        if (c > 0 && block_of(c) != block_of(c - 1)) out << " |";
        out << " " << basis.var_order[c].str();
    }
    out << "\n";
    for (std::size_t r = 0; r < basis.matrix.rows(); ++r) {
        for (std::size_t c = 0; c < basis.matrix.cols(); ++c) {
            if (c > 0 && block_of(c) != block_of(c - 1)) out << " |";
            out << " " << std::setw(2) << basis.matrix(r, c).get_str();
        }
        out << "\n";
    }
    out << "# unused variables:";
    if (basis.dropped_vars.empty())
        out << " none";
    else
        for (const auto& v : basis.dropped_vars) out << " " << v.str();
    out << "\n";
    return 0;
}

int cmd_primes(std::ostream& out, int n, bool as_json) {
    const auto primes = minimal_primes(basis_matrix(cyclic_model(n)));
    if (as_json) {
        json j;
        j["n"] = n;
        json comps = json::array();
        for (const auto& p : primes) comps.push_back(prime_json(p));
        j["components"] = comps;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "minimal primes of the cyclic model, n=" << n << " (" << primes.size()
        << " components)\n";
    for (std::size_t k = 0; k < primes.size(); ++k) print_prime(out, k, primes[k]);
    return 0;
}

int cmd_implication(std::ostream& out, int n, std::size_t samples, bool as_json) {
    const ImplicationReport report = implied_marginals(cyclic_model(n), samples, env_seed());
    if (as_json) {
        json j;
        j["n"] = n;
        j["seed"] = report.seed;
        j["model"] = statements_json(report.model.statements);
        json comps = json::array();
        for (const auto& p : report.primes) comps.push_back(prime_json(p));
        j["primes"] = comps;
        j["toric_excluded"] = report.toric_excluded;
        json excluded = json::array();
        for (const auto& [prime, cert] : report.excluded)
            excluded.push_back(
                {{"component", prime_json(prime)}, {"certificate", certificate_json(cert)}});
        j["excluded"] = excluded;
        j["evidence_samples"] = report.evidence_samples;
        j["surviving_vars"] = vars_json(report.surviving_vars);
        j["implied"] = statements_json(report.implied);
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "cyclic model n=" << n << ": " << report.model.statements.size()
        << " statements\n";
    for (const auto& s : report.model.statements) out << "  " << s.str() << "\n";
    out << "minimal primes: " << report.primes.size() << " components\n";
    for (std::size_t k = 0; k < report.primes.size(); ++k)
        print_prime(out, k, report.primes[k]);
    if (report.toric_excluded) {
        const auto& cert = report.excluded.front().second;
        out << "toric component excluded from the positive definite cone:\n";
        out << "  binomial " << product_str(cert.positive_product_vars) << " - "
            << product_str(cert.negative_product_vars)
            << " lies in the toric ideal (all-ones lattice combination, exact)\n";
        out << "  strict inequality checked on " << report.evidence_samples
            << " seeded positive definite samples\n";
    } else {
        out << "warning: toric component not excluded; conclusions restricted to "
               "variables vanishing on every component\n";
    }
    out << "implied marginal statements (" << report.implied.size() << "):\n";
    for (const auto& s : report.implied) out << "  " << s.str() << "\n";
    return 0;
}

int cmd_counterexample(std::ostream& out, int n, const std::string& a_text,
                       const std::string& e_text, int drop, bool as_json) {
    const Rational a = a_text.empty() ? rational(1, 2L * n) : parse_rational(a_text);
    const Rational e = e_text.empty() ? rational(1, 4L * n) : parse_rational(e_text);
    if (drop < 1 || drop > n)
        throw Error(ErrorKind::Parameter,
                    "--drop must name a statement index in 1.." + std::to_string(n));
    const SymMatrix base = counterexample_sigma(n, a, e);
    const SymMatrix sigma = cyclic_permute(base, (drop + 1) % n);

    MatrixDocument doc = to_document(sigma);
    doc.metadata["a"] = to_string(a);
    doc.metadata["e"] = to_string(e);
    doc.metadata["dropped_statement"] = std::to_string(drop);
    doc.metadata["family"] = "cyclic-counterexample";
    if (as_json) {
        out << to_json(doc) << "\n";
        return 0;
    }
    out << "counterexample matrix, n=" << n << ", a=" << to_string(a)
        << ", e=" << to_string(e) << "\n";
    out << "satisfies every cyclic statement except " << drop << " ("
        << cyclic_model(n).statements[drop - 1].str()
        << "); no marginal conclusion holds\n";
    print_matrix(out, sigma);
    return 0;
}

int cmd_check(std::ostream& out, const std::string& sigma_path,
              const std::string& statement_text, bool as_json) {
    const SymMatrix sigma = to_sym_matrix(load_matrix_file(sigma_path));
    const CIStatement stmt = parse_statement(statement_text);
    const bool holds = ci_holds(sigma, stmt);
    if (as_json) {
        json j;
        j["statement"] = stmt.str();
        j["n"] = sigma.dim();
        j["holds"] = holds;
        out << j.dump(2) << "\n";
    } else {
        out << (holds ? "HOLDS" : "FAILS") << "\n";
    }
    return 0;
}

int cmd_witness(std::ostream& out, const std::string& sigma_path, int n, bool as_json) {
    const SymMatrix sigma = to_sym_matrix(load_matrix_file(sigma_path));
    const WitnessReport report =
        check_witness(sigma, cyclic_model(n), marginal_conclusions(n));
    if (as_json) {
        json j = witness_json(report);
        j["n"] = n;
        out << j.dump(2) << "\n";
    } else {
        print_witness(out, report);
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact decision procedure for cyclic Gaussian conditional-independence "
                 "implications"};
    app.require_subcommand(1);

    int impl_n = 0;
    std::size_t impl_samples = 100;
    bool impl_json = false;
    auto* impl = app.add_subcommand("implication",
                                    "derive the implied marginal independences for the "
                                    "cyclic model");
    impl->add_option("--n", impl_n, "model size (>= 4)")->required();
    impl->add_option("--samples", impl_samples,
                     "positive definite samples checked against the certificate");
    impl->add_flag("--json", impl_json, "structured output");

    int primes_n = 0;
    bool primes_json = false;
    auto* primes = app.add_subcommand("primes", "minimal primes of the cyclic CI ideal");
    primes->add_option("--n", primes_n, "model size (>= 4)")->required();
    primes->add_flag("--json", primes_json, "structured output");

    int ce_n = 0, ce_drop = -1;
    std::string ce_a, ce_e;
    bool ce_json = false;
    auto* ce = app.add_subcommand("counterexample",
                                  "diagonally dominant witness satisfying all cyclic "
                                  "statements but one");
    ce->add_option("--n", ce_n, "model size (>= 4)")->required();
    ce->add_option("--a", ce_a, "parameter a as P/Q, 0 < a < 1/n (default 1/(2n))");
    ce->add_option("--e", ce_e, "parameter e as P/Q, 0 < e < 1/n (default 1/(4n))");
    ce->add_option("--drop", ce_drop, "index of the statement to violate (default n-1)");
    ce->add_flag("--json", ce_json, "emit the matrix document as JSON");

    std::string check_sigma, check_stmt;
    bool check_json = false;
    auto* check = app.add_subcommand("check", "exact CI test on a covariance matrix file");
    check->add_option("--sigma", check_sigma, "matrix document (JSON)")->required();
    check->add_option("--statement", check_stmt, "statement, e.g. \"1 _||_ 2 | 3\"")
        ->required();
    check->add_flag("--json", check_json, "structured output");

    std::string wit_sigma;
    int wit_n = 0;
    bool wit_json = false;
    auto* wit = app.add_subcommand("witness",
                                   "evaluate a matrix against the cyclic model and its "
                                   "marginal conclusions");
    wit->add_option("--sigma", wit_sigma, "matrix document (JSON)")->required();
    wit->add_option("--model-n", wit_n, "cyclic model size (>= 4)")->required();
    wit->add_flag("--json", wit_json, "structured output");

    int basis_n = 0;
    auto* basis = app.add_subcommand("basis", "lattice basis matrix in block layout");
    basis->add_option("--n", basis_n, "model size (>= 4)")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << "\n";
        return 2;
    }

    try {
        if (impl->parsed()) return cmd_implication(out, impl_n, impl_samples, impl_json);
        if (primes->parsed()) return cmd_primes(out, primes_n, primes_json);
        if (ce->parsed()) {
            if (ce->count("--drop") == 0) ce_drop = ce_n - 1;
            return cmd_counterexample(out, ce_n, ce_a, ce_e, ce_drop, ce_json);
        }
        if (check->parsed()) return cmd_check(out, check_sigma, check_stmt, check_json);
        if (wit->parsed()) return cmd_witness(out, wit_sigma, wit_n, wit_json);
        if (basis->parsed()) return cmd_basis(out, basis_n);
        err << "error: usage: no subcommand selected\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace gci::cli
