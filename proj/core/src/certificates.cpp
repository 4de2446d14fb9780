#include "gci/certificates.hpp"

#include "gci/error.hpp"
#include "gci/linalg.hpp"

namespace gci {

namespace {

int wrap(int i, int n) { return ((i - 1) % n + n) % n + 1; }

}  // namespace

SymMatrix hadamard(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim())
        throw Error(ErrorKind::Dimension, "hadamard product of different dimensions");
    SymMatrix out(a.dim());
    for (int i = 1; i <= a.dim(); ++i)
        for (int j = i; j <= a.dim(); ++j) {
            Rational prod = a.at(i, j) * b.at(i, j);
            out.set(i, j, prod);
        }
    return out;
}

SymMatrix cyclic_permute(const SymMatrix& sigma, int k) {
    const int n = sigma.dim();
    if (k < 0) throw Error(ErrorKind::Parameter, "cyclic shift must be nonnegative");
    k %= n;
    SymMatrix out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) out.set(i, j, sigma.at(wrap(i - k, n), wrap(j - k, n)));
    return out;
}

SymMatrix cyclic_hadamard_power(const SymMatrix& sigma) {
    SymMatrix acc = sigma;
    for (int k = 1; k < sigma.dim(); ++k) acc = hadamard(acc, cyclic_permute(sigma, k));
    return acc;
}

ExclusionCertificate exclusion_certificate(int n) {
    if (n < 4)
        throw Error(ErrorKind::Size,
                    "exclusion certificate needs n >= 4, got n=" + std::to_string(n));
    const BasisMatrix basis = basis_matrix(cyclic_model(n));

    ExclusionCertificate cert;
    cert.n = n;

    // v = sum of all basis rows.
    std::vector<Int> v(basis.matrix.cols(), 0);
    for (std::size_t r = 0; r < basis.matrix.rows(); ++r)
        for (std::size_t c = 0; c < basis.matrix.cols(); ++c) v[c] += basis.matrix(r, c);

    // Closed form: sum e_ii - sum e_{i-2,i}.
    for (int i = 1; i <= n; ++i) {
        ev_add(cert.binomial, CovVariable(i, i), +1);
        ev_add(cert.binomial, CovVariable(wrap(i - 2, n), i), -1);
        cert.positive_product_vars.emplace_back(i, i);
        cert.negative_product_vars.emplace_back(wrap(i - 2, n), i);
    }
    if (coordinates(cert.binomial, basis.var_order) != v)
        throw Error(ErrorKind::Internal,
                    "certificate binomial does not match the row sum of M_n");

    auto coeffs = in_integer_row_span(v, basis.matrix);
    if (!coeffs)
        throw Error(ErrorKind::Internal, "certificate vector is not in the row lattice");
    for (const Int& c : *coeffs)
        if (c != 1)
            throw Error(ErrorKind::Internal,
                        "certificate lattice coefficients are not all ones");
    cert.lattice_coeffs = *coeffs;
    return cert;
}

bool certificate_violates_pd(const ExclusionCertificate& cert, const SymMatrix& sigma) {
    if (sigma.dim() != cert.n)
        throw Error(ErrorKind::Dimension, "certificate dimension mismatch");
    Rational pos(1), neg(1);
    for (const auto& v : cert.positive_product_vars) pos *= sigma.at(v.i, v.j);
    for (const auto& v : cert.negative_product_vars) neg *= sigma.at(v.i, v.j);
    Rational pos2 = pos * pos, neg2 = neg * neg;
    return pos2 > neg2;
}

SymMatrix counterexample_sigma(int n, const Rational& a, const Rational& e) {
    if (n < 4)
        throw Error(ErrorKind::Size,
                    "counterexample family needs n >= 4, got n=" + std::to_string(n));
    const Rational bound = rational(1, n);
    if (a <= 0 || a >= bound || e <= 0 || e >= bound)
        throw Error(ErrorKind::Parameter,
                    "parameters must satisfy 0 < a, e < 1/n; got a=" + to_string(a) +
                        ", e=" + to_string(e) + ", n=" + std::to_string(n));

    SymMatrix sigma(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) sigma.set(i, j, e);
    for (int i = 1; i <= n; ++i) sigma.set(wrap(i - 2, n), i, a);
    for (int i = 1; i <= n; ++i)
        sigma.set(wrap(i - 1, n), i, pow(a, static_cast<unsigned long>(n - i + 1)));
    for (int i = 1; i <= n; ++i) sigma.set(i, i, Rational(1));
    return sigma;
}

SymMatrix counterexample_sigma(int n) {
    if (n < 4)
        throw Error(ErrorKind::Size,
                    "counterexample family needs n >= 4, got n=" + std::to_string(n));
    return counterexample_sigma(n, rational(1, 2L * n), rational(1, 4L * n));
}

}  // namespace gci
