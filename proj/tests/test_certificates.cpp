#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gci/certificates.hpp"
#include "gci/ci.hpp"
#include "gci/linalg.hpp"
#include "helpers.hpp"

using namespace gci;
using namespace gci::test;

namespace {

SymMatrix all_ones(int n) {
    SymMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) m.set(i, j, q(1));
    return m;
}

int wrap(int i, int n) { return ((i - 1) % n + n) % n + 1; }

}  // namespace

TEST_CASE("hadamard product basics") {
    SymMatrix sigma = sym({{q(1), q(1, 2)}, {q(1, 2), q(1)}});
    CHECK(hadamard(sigma, SymMatrix::identity(2)) ==
          sym({{q(1), q(0)}, {q(0), q(1)}}));
    CHECK(hadamard(sigma, all_ones(2)) == sigma);
    CHECK(hadamard(sigma, sym({{q(2), q(1)}, {q(1), q(2)}})) ==
          sym({{q(2), q(1, 2)}, {q(1, 2), q(2)}}));
    CHECK_THROWS_AS(hadamard(sigma, SymMatrix::identity(3)), Error);
}

TEST_CASE("hadamard is commutative and associative") {
    Sampler s(41);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(s.next_int(2, 5));
        const SymMatrix a = random_symmetric_rational(s, n);
        const SymMatrix b = random_symmetric_rational(s, n);
        const SymMatrix c = random_symmetric_rational(s, n);
        CHECK(hadamard(a, b) == hadamard(b, a));
        CHECK(hadamard(hadamard(a, b), c) == hadamard(a, hadamard(b, c)));
    }
}

TEST_CASE("hadamard closure of positive definiteness") {
    Sampler s(42);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(s.next_int(2, 6));
        const SymMatrix a = s.random_pd(n);
        const SymMatrix b = s.random_pd(n);
        CHECK(is_positive_definite(hadamard(a, b)));
    }
}

TEST_CASE("cyclic permutation") {
    Sampler s(43);
    const SymMatrix sigma = random_symmetric_rational(s, 5);
    CHECK(cyclic_permute(sigma, 0) == sigma);
    CHECK(cyclic_permute(sigma, 5) == sigma);

    SymMatrix three(3);
    three = SymMatrix::identity(3);
    three.set(1, 2, q(5));
    const SymMatrix shifted = cyclic_permute(three, 1);
    CHECK(shifted.at(2, 3) == q(5));
    CHECK(shifted.at(1, 2) == q(0));

    // Composition: pi^a then pi^b equals pi^{a+b}.
    const SymMatrix left = cyclic_permute(cyclic_permute(sigma, 2), 1);
    CHECK(left == cyclic_permute(sigma, 3));
    CHECK_THROWS_AS(cyclic_permute(sigma, -1), Error);
}

TEST_CASE("cyclic hadamard power") {
    CHECK(cyclic_hadamard_power(SymMatrix::identity(4)) == SymMatrix::identity(4));
    CHECK(cyclic_hadamard_power(all_ones(4)) == all_ones(4));

    Sampler s(44);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(s.next_int(3, 6));
        const SymMatrix sigma = random_symmetric_rational(s, n);
        const SymMatrix power = cyclic_hadamard_power(sigma);

        // Every diagonal entry is the full product of the diagonal of sigma.
        Rational diag_product(1);
        for (int i = 1; i <= n; ++i) diag_product *= sigma.at(i, i);
        for (int i = 1; i <= n; ++i) CHECK(power.at(i, i) == diag_product);

        // Invariance under pre-permuting: the product runs over the whole cycle.
        CHECK(cyclic_hadamard_power(cyclic_permute(sigma, 1)) == power);

        // Entry (1,3) is the product of the two-step diagonal.
        Rational skew_product(1);
        for (int i = 1; i <= n; ++i) skew_product *= sigma.at(wrap(i - 2, n), i);
        CHECK(power.at(1, 3) == skew_product);
    }
}

TEST_CASE("exclusion certificate construction") {
    const ExclusionCertificate c5 = exclusion_certificate(5);
    CHECK(c5.n == 5);
    CHECK(c5.lattice_coeffs == std::vector<Int>(5, Int(1)));
    CHECK(c5.positive_product_vars ==
          std::vector<CovVariable>{{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}});
    std::vector<CovVariable> neg = c5.negative_product_vars;
    std::sort(neg.begin(), neg.end());
    CHECK(neg == std::vector<CovVariable>{{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}});

    ExponentVector expected;
    for (int i = 1; i <= 5; ++i) ev_add(expected, CovVariable(i, i), +1);
    for (const auto& v : neg) ev_add(expected, v, -1);
    CHECK(c5.binomial == expected);

    // n=4: the skew variables repeat, giving squared factors.
    const ExclusionCertificate c4 = exclusion_certificate(4);
    std::vector<CovVariable> neg4 = c4.negative_product_vars;
    std::sort(neg4.begin(), neg4.end());
    CHECK(neg4 == std::vector<CovVariable>{{1, 3}, {1, 3}, {2, 4}, {2, 4}});
    CHECK(c4.binomial.at(CovVariable(1, 3)) == -2);
    CHECK(c4.binomial.at(CovVariable(2, 4)) == -2);

    try {
        exclusion_certificate(3);
        FAIL("expected size error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Size);
    }
}

TEST_CASE("certificate inequality on positive definite matrices") {
    const ExclusionCertificate c5 = exclusion_certificate(5);
    CHECK(certificate_violates_pd(c5, SymMatrix::identity(5)));
    CHECK_FALSE(certificate_violates_pd(c5, all_ones(5)));  // equality outside the cone
    CHECK_THROWS_AS(certificate_violates_pd(c5, SymMatrix::identity(4)), Error);

    Sampler s(45);
    for (int n = 4; n <= 7; ++n) {
        const ExclusionCertificate cert = exclusion_certificate(n);
        for (int trial = 0; trial < 100; ++trial)
            CHECK(certificate_violates_pd(cert, s.random_pd(n)));
    }
}

TEST_CASE("certificate inequality equals the hadamard-power determinant route") {
    // (prod sigma_ii)^2 - (prod sigma_{i-2,i})^2 is the {1,3} principal minor
    // of the cyclic hadamard power; check the identity exactly.
    Sampler s(46);
    for (int n = 4; n <= 7; ++n) {
        const ExclusionCertificate cert = exclusion_certificate(n);
        for (int trial = 0; trial < 20; ++trial) {
            const SymMatrix sigma = random_symmetric_rational(s, n);
            const SymMatrix power = cyclic_hadamard_power(sigma);
            const Rational minor = det(submatrix(power, {1, 3}, {1, 3}));
            Rational pos(1), negv(1);
            for (const auto& v : cert.positive_product_vars) pos *= sigma.at(v.i, v.j);
            for (const auto& v : cert.negative_product_vars) negv *= sigma.at(v.i, v.j);
            CHECK(minor == pos * pos - negv * negv);
        }
    }
}

TEST_CASE("counterexample family values for n=5") {
    const SymMatrix sigma = counterexample_sigma(5, q(1, 10), q(1, 20));
    // sigma_{i-1,i} = a^{n-i+1} cyclically, so sigma_{1,5} = a^5.
    CHECK(sigma.at(1, 2) == q(1, 10000));    // a^4
    CHECK(sigma.at(2, 3) == q(1, 1000));     // a^3
    CHECK(sigma.at(3, 4) == q(1, 100));      // a^2
    CHECK(sigma.at(4, 5) == q(1, 10));       // a
    CHECK(sigma.at(1, 5) == q(1, 100000));   // a^5
    CHECK(sigma.at(1, 3) == q(1, 10));
    CHECK(sigma.at(2, 4) == q(1, 10));
    CHECK(sigma.at(3, 5) == q(1, 10));
    CHECK(sigma.at(1, 4) == q(1, 10));
    CHECK(sigma.at(2, 5) == q(1, 10));
    for (int i = 1; i <= 5; ++i) CHECK(sigma.at(i, i) == q(1));
}

TEST_CASE("counterexample family properties across n") {
    for (int n = 4; n <= 8; ++n) {
        const SymMatrix sigma = counterexample_sigma(n);
        CHECK(is_diagonally_dominant(sigma));
        CHECK(is_positive_definite(sigma));
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) CHECK(sigma.at(i, j) != 0);

        // Exactly statement n-1 fails.
        const CIModel model = cyclic_model(n);
        for (int k = 1; k <= n; ++k)
            CHECK(ci_holds(sigma, model.statements[k - 1]) == (k != n - 1));

        // No marginal conclusion holds (all entries nonzero).
        for (const auto& stmt : marginal_conclusions(n))
            CHECK_FALSE(ci_holds(sigma, stmt));
    }
}

TEST_CASE("counterexample distance-3 entries use e") {
    const SymMatrix sigma = counterexample_sigma(6, q(1, 12), q(1, 24));
    CHECK(sigma.at(1, 4) == q(1, 24));
    CHECK(sigma.at(2, 5) == q(1, 24));
    CHECK(sigma.at(3, 6) == q(1, 24));
    CHECK(sigma.at(1, 3) == q(1, 12));
}

TEST_CASE("counterexample parameter validation") {
    CHECK_THROWS_AS(counterexample_sigma(3), Error);
    try {
        counterexample_sigma(5, q(1, 5), q(1, 20));  // a = 1/n not allowed
        FAIL("expected parameter error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parameter);
    }
    CHECK_THROWS_AS(counterexample_sigma(5, q(0), q(1, 20)), Error);
    CHECK_THROWS_AS(counterexample_sigma(5, q(1, 10), q(1, 4)), Error);
    CHECK_THROWS_AS(counterexample_sigma(5, q(-1, 10), q(1, 20)), Error);
}
