#include "gci/primes.hpp"

#include <algorithm>

#include "gci/error.hpp"

namespace gci {

SignMatrix::SignMatrix(std::size_t rows_, std::size_t cols_)
    : rows(rows_), cols(cols_), entries(rows_ * cols_, 0) {}

SignMatrix SignMatrix::of(const IntMatrix& m) {
    SignMatrix s(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            s.set(r, c, sgn(m(r, c)));
    s.col_labels = m.col_labels();
    return s;
}

void SignMatrix::set(std::size_t r, std::size_t c, int v) {
    if (v < -1 || v > 1)
        throw Error(ErrorKind::Parameter, "sign entries must be -1, 0 or +1");
    entries[r * cols + c] = static_cast<std::int8_t>(v);
}

bool is_mixed(const SignMatrix& m) {
    for (std::size_t r = 0; r < m.rows; ++r) {
        bool pos = false, neg = false;
        for (std::size_t c = 0; c < m.cols; ++c) {
            if (m.at(r, c) > 0) pos = true;
            if (m.at(r, c) < 0) neg = true;
        }
        if (!pos || !neg) return false;
    }
    return true;
}

namespace {

struct RowMasks {
    std::vector<std::uint64_t> pos, neg;  // column masks per row
};

RowMasks row_masks(const SignMatrix& m) {
    if (m.cols > 63)
        throw Error(ErrorKind::Search,
                    "irreducibility split search supports at most 63 columns");
    RowMasks rm;
    rm.pos.assign(m.rows, 0);
    rm.neg.assign(m.rows, 0);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) {
            if (m.at(r, c) > 0) rm.pos[r] |= std::uint64_t(1) << c;
            if (m.at(r, c) < 0) rm.neg[r] |= std::uint64_t(1) << c;
        }
    return rm;
}

}  // namespace

bool is_irreducible(const SignMatrix& m) {
    const std::size_t s = m.rows, t = m.cols;
    if (s < 1 || t < 1) return false;
    if (t > s) return false;
    if (!is_mixed(m)) return false;

    const RowMasks rm = row_masks(m);
    const std::uint64_t full = (t == 64) ? ~std::uint64_t(0)
                                         : ((std::uint64_t(1) << t) - 1);
    for (std::uint64_t sub = 1; sub < full; ++sub) {
        // R' = rows supported on the columns of T' = sub.
        std::size_t s_prime = 0;
        bool mixed = true;
        for (std::size_t r = 0; r < s && mixed; ++r) {
            const bool pos = (rm.pos[r] & sub) != 0;
            const bool neg = (rm.neg[r] & sub) != 0;
            if (pos || neg) {
                ++s_prime;
                if (!pos || !neg) mixed = false;
            }
        }
        if (!mixed) continue;
        const std::size_t t_prime = static_cast<std::size_t>(__builtin_popcountll(sub));
        if (t_prime <= s_prime && (t - t_prime) > (s - s_prime)) return false;
    }
    return true;
}

std::vector<std::vector<std::size_t>> candidate_column_sets(
    const IntMatrix& m, const PrimeSearchOptions& options) {
    std::vector<std::size_t> nonzeros(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0) ++nonzeros[c];

    bool sparse = true;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (nonzeros[c] > 2) sparse = false;

    std::vector<std::size_t> pool;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!sparse || nonzeros[c] == 2) pool.push_back(c);

    if (pool.size() > options.column_cap)
        throw Error(ErrorKind::Search,
                    "candidate pool has " + std::to_string(pool.size()) +
                        " columns, above the cap of " + std::to_string(options.column_cap));

    std::vector<std::vector<std::size_t>> out;
    const std::uint64_t count = std::uint64_t(1) << pool.size();
    out.reserve(count);
    for (std::uint64_t sub = 0; sub < count; ++sub) {
        std::vector<std::size_t> set;
        for (std::size_t k = 0; k < pool.size(); ++k)
            if (sub & (std::uint64_t(1) << k)) set.push_back(pool[k]);
        out.push_back(std::move(set));
    }
    return out;
}

std::vector<std::vector<CovVariable>> candidate_variable_sets(
    const BasisMatrix& basis, const PrimeSearchOptions& options) {
    std::vector<std::vector<CovVariable>> out;
    for (const auto& cols : candidate_column_sets(basis.matrix, options)) {
        std::vector<CovVariable> vars;
        vars.reserve(cols.size());
        for (auto c : cols) vars.push_back(basis.var_order[c]);
        out.push_back(std::move(vars));
    }
    return out;
}

std::vector<std::vector<std::size_t>> prime_support_sets(
    const IntMatrix& m, const PrimeSearchOptions& options) {
    const SignMatrix sign = SignMatrix::of(m);
    std::vector<std::vector<std::size_t>> accepted;
    for (const auto& cols : candidate_column_sets(m, options)) {
        if (cols.empty()) continue;
        std::vector<std::size_t> meeting;
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (auto c : cols)
                if (sign.at(r, c) != 0) {
                    meeting.push_back(r);
                    break;
                }
        SignMatrix block(meeting.size(), cols.size());
        for (std::size_t r = 0; r < meeting.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c)
                block.set(r, c, sign.at(meeting[r], cols[c]));
        if (is_irreducible(block)) accepted.push_back(cols);
    }
    return accepted;
}

namespace {

MinimalPrime make_prime(const BasisMatrix& basis, const std::vector<std::size_t>& cols) {
    MinimalPrime prime;
    for (auto c : cols) prime.vanishing_vars.push_back(basis.var_order[c]);
    std::sort(prime.vanishing_vars.begin(), prime.vanishing_vars.end());
    for (std::size_t r = 0; r < basis.matrix.rows(); ++r) {
        bool meets = false;
        for (auto c : cols)
            if (basis.matrix(r, c) != 0) {
                meets = true;
                break;
            }
        if (!meets) prime.residual_rows.push_back(r + 1);
    }
    return prime;
}

}  // namespace

std::vector<MinimalPrime> minimal_primes(const BasisMatrix& basis,
                                         const PrimeSearchOptions& options) {
    if (!is_saturated(basis))
        throw Error(ErrorKind::Parameter,
                    "minimal-prime enumeration requires a saturated lattice basis");

    std::vector<MinimalPrime> out;
    out.push_back(make_prime(basis, {}));  // toric component, always minimal
    for (const auto& cols : prime_support_sets(basis.matrix, options))
        out.push_back(make_prime(basis, cols));

    std::sort(out.begin(), out.end(), [](const MinimalPrime& x, const MinimalPrime& y) {
        return x.vanishing_vars < y.vanishing_vars;
    });

    // Accepted components are pairwise incomparable by construction: a
    // strict vanishing-set containment with identical residual rows would
    // mean a non-minimal accepted component, which is an implementation
    // bug, so it is raised loudly rather than silently dropped.
    for (std::size_t x = 0; x < out.size(); ++x)
        for (std::size_t y = 0; y < out.size(); ++y) {
            if (x == y) continue;
            const auto& small = out[x].vanishing_vars;
            const auto& big = out[y].vanishing_vars;
            if (small.size() >= big.size()) continue;
            if (out[x].residual_rows != out[y].residual_rows) continue;
            if (std::includes(big.begin(), big.end(), small.begin(), small.end()))
                throw Error(ErrorKind::Internal,
                            "minimality violated: accepted component strictly contains "
                            "another with identical residual rows");
        }
    return out;
}

}  // namespace gci
