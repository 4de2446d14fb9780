#include "gci/sampling.hpp"

#include <vector>

#include "gci/error.hpp"

namespace gci {

long Sampler::next_int(long lo, long hi) {
    if (lo > hi) throw Error(ErrorKind::Parameter, "empty sampling range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng_() % span);
}

SymMatrix Sampler::random_pd(int n, long entry_bound) {
    std::vector<std::vector<Int>> b(n, std::vector<Int>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) b[r][c] = next_int(-entry_bound, entry_bound);
    SymMatrix sigma(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Int dot = (i == j) ? 1 : 0;
            for (int k = 0; k < n; ++k) dot += b[i][k] * b[j][k];
            sigma.set(i + 1, j + 1, Rational(dot));
        }
    return sigma;
}

SymMatrix Sampler::random_dominant_rational(int n) {
    SymMatrix sigma(n);
    for (int i = 1; i <= n; ++i) sigma.set(i, i, Rational(2));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            long num = next_int(-2, 2);
            long den = 2L * n + next_int(0, 3 * n);
            sigma.set(i, j, rational(num, den));
        }
    return sigma;
}

}  // namespace gci
