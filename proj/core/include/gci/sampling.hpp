#pragma once

#include <cstdint>
#include <random>

#include "gci/matrix.hpp"

namespace gci {

/// Seeded deterministic sampling. mt19937_64 has a pinned-down sequence and
/// the integer draws below avoid std distributions, so identical seeds yield
/// identical samples on every platform.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next_u64() { return rng_(); }

    /// Uniform-ish integer in [lo, hi] (modulo draw; bias is irrelevant here).
    long next_int(long lo, long hi);

    /// Exact positive definite matrix B * B^T + I with integer B,
    /// entries of B in [-entry_bound, entry_bound].
    SymMatrix random_pd(int n, long entry_bound = 3);

    /// Strictly diagonally dominant rational matrix: diagonal 2, off-diagonal
    /// p/q with |p/q| <= 1/n. Positive definite by dominance.
    SymMatrix random_dominant_rational(int n);

private:
    std::mt19937_64 rng_;
};

}  // namespace gci
