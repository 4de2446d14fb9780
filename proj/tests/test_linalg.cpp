#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include "gci/intlinalg.hpp"
#include "gci/linalg.hpp"
#include "helpers.hpp"

using namespace gci;
using namespace gci::test;

namespace {

double min_eigenvalue(const SymMatrix& sigma) {
    const int n = sigma.dim();
    Eigen::MatrixXd m(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m(i - 1, j - 1) = sigma.at(i, j).get_d();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    return solver.eigenvalues().minCoeff();
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rational("1/2") == q(1, 2));
    CHECK(parse_rational("2/4") == q(1, 2));
    CHECK(parse_rational("-6/4") == q(-3, 2));
    CHECK(parse_rational("7") == q(7));
    CHECK(to_string(q(-3, 2)) == "-3/2");
    CHECK(to_string(q(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("a/2"), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK(pow(q(2, 3), 3) == q(8, 27));
    CHECK(pow(q(-1, 2), 2) == q(1, 4));
}

TEST_CASE("determinant basics") {
    CHECK(det(RatMatrix::identity(3)) == q(1));
    CHECK(det(rat_matrix({{q(1), q(2)}, {q(2), q(4)}})) == q(0));
    // 2x2 cofactor oracle: 1*1 - (1/2)*(1/2) = 3/4.
    const auto m = rat_matrix({{q(1), q(1, 2)}, {q(1, 2), q(1)}});
    CHECK(cofactor_det(m) == q(3, 4));
    CHECK(det(m) == q(3, 4));
    CHECK_THROWS_AS(det(RatMatrix(2, 3)), Error);
    try {
        det(RatMatrix(2, 3));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Dimension);
    }
}

TEST_CASE("determinant agrees with the cofactor oracle on random matrices") {
    Sampler s(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = static_cast<std::size_t>(s.next_int(1, 5));
        const RatMatrix m = random_rational_matrix(s, n, n);
        CHECK(det(m) == cofactor_det(m));
    }
}

TEST_CASE("determinant is multiplicative") {
    Sampler s(12);
    for (int trial = 0; trial < 60; ++trial) {
        const RatMatrix a = random_int_matrix(s, 3, 3);
        const RatMatrix b = random_int_matrix(s, 3, 3);
        Rational lhs = det(a * b);
        Rational rhs = det(a) * det(b);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("rank basics") {
    CHECK(rank(RatMatrix(3, 3)) == 0);
    CHECK(rank(RatMatrix::identity(4)) == 4);
    CHECK(rank(rat_matrix({{q(1), q(2)}, {q(2), q(4)}})) == 1);
}

TEST_CASE("rank equals rank of the transpose") {
    Sampler s(13);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(s.next_int(1, 6));
        const std::size_t cols = static_cast<std::size_t>(s.next_int(1, 6));
        const std::size_t inner = static_cast<std::size_t>(s.next_int(1, 4));
        // Product of thin factors so deficient ranks actually show up.
        const RatMatrix m = random_int_matrix(s, rows, inner, 2) *
                            random_int_matrix(s, inner, cols, 2);
        CHECK(rank(m) == rank(m.transposed()));
        CHECK(rank(m) <= std::min({rows, cols, inner}));
    }
}

TEST_CASE("schur complement examples") {
    CHECK(schur_complement(SymMatrix::identity(3), {1}, {2}, {3}) ==
          rat_matrix({{q(0)}}));

    SymMatrix sigma(3);
    for (int i = 1; i <= 3; ++i) sigma.set(i, i, q(1));
    sigma.set(1, 2, q(1, 2));
    sigma.set(1, 3, q(1, 2));
    sigma.set(2, 3, q(1, 2));
    CHECK(schur_complement(sigma, {1}, {2}, {3}) == rat_matrix({{q(1, 4)}}));

    // sigma_12 = sigma_13 sigma_23 / sigma_33 makes the complement vanish.
    sigma.set(1, 2, q(1, 4));
    CHECK(schur_complement(sigma, {1}, {2}, {3}) == rat_matrix({{q(0)}}));
}

TEST_CASE("schur complement errors") {
    SymMatrix sigma = SymMatrix::identity(3);
    sigma.set(3, 3, q(0));
    try {
        schur_complement(sigma, {1}, {2}, {3});
        FAIL("expected singular error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Singular);
    }
    try {
        schur_complement(SymMatrix::identity(3), {1}, {2}, {2});
        FAIL("expected disjointness error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Disjoint);
    }
    CHECK_THROWS_AS(schur_complement(SymMatrix::identity(3), {1}, {2}, {4}), Error);
}

TEST_CASE("schur complement equals bordered determinant over sigma_cc") {
    Sampler s(14);
    int done = 0;
    while (done < 100) {
        const SymMatrix sigma = random_symmetric_rational(s, 4);
        const int a = 1, b = 2, c = static_cast<int>(s.next_int(3, 4));
        if (sigma.at(c, c) == 0) continue;
        const RatMatrix complement = schur_complement(sigma, {a}, {b}, {c});
        const RatMatrix bordered = submatrix(sigma, {a, c}, {b, c});
        CHECK(complement(0, 0) == det(bordered) / sigma.at(c, c));
        ++done;
    }
}

TEST_CASE("positive definiteness examples") {
    CHECK(is_positive_definite(SymMatrix::identity(4)));
    CHECK_FALSE(is_positive_definite(sym({{q(1), q(2)}, {q(2), q(1)}})));
    CHECK(is_positive_definite(sym({{q(2), q(1)}, {q(1), q(2)}})));
}

TEST_CASE("positive definiteness matches the float eigenvalue oracle") {
    Sampler s(15);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(s.next_int(2, 6));
        const SymMatrix pd = s.random_pd(n);
        CHECK(is_positive_definite(pd));
        CHECK(min_eigenvalue(pd) > 1e-9);
    }
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(s.next_int(2, 6));
        SymMatrix m = s.random_pd(n);
        // Push one diagonal entry below its Gershgorin radius: some
        // eigenvalue goes negative.
        const int k = static_cast<int>(s.next_int(1, n));
        Rational radius(1);
        for (int j = 1; j <= n; ++j)
            if (j != k) radius += abs(m.at(k, j));
        Rational neg = -radius;
        m.set(k, k, neg);
        CHECK_FALSE(is_positive_definite(m));
        CHECK(min_eigenvalue(m) < -1e-9);
    }
}

TEST_CASE("diagonal dominance") {
    CHECK(is_diagonally_dominant(SymMatrix::identity(3)));
    CHECK_FALSE(is_diagonally_dominant(sym({{q(1), q(1)}, {q(1), q(1)}})));

    // The sharpness family at n=5, a=1/10, e=1/20, built from the raw
    // formulas (not via the library constructor).
    SymMatrix sigma(5);
    for (int i = 1; i <= 5; ++i) sigma.set(i, i, q(1));
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) sigma.set(i, j, q(1, 20));
    auto wrap = [](int i) { return (i - 1 + 5) % 5 + 1; };
    for (int i = 1; i <= 5; ++i) sigma.set(wrap(i - 2), i, q(1, 10));
    for (int i = 1; i <= 5; ++i) {
        Rational value = pow(q(1, 10), static_cast<unsigned long>(5 - i + 1));
        sigma.set(wrap(i - 1), i, value);
    }
    CHECK(is_diagonally_dominant(sigma));
    CHECK(is_positive_definite(sigma));
}

TEST_CASE("smith normal form basics") {
    auto id = smith_normal_form(IntMatrix::identity(4));
    CHECK(id.invariant_factors == std::vector<Int>{1, 1, 1, 1});

    auto twice = smith_normal_form(int_matrix({{2, 0}, {0, 2}}));
    CHECK(twice.invariant_factors == std::vector<Int>{2, 2});

    auto mixed = smith_normal_form(int_matrix({{2, 4}, {6, 8}}));
    CHECK(mixed.invariant_factors == std::vector<Int>{2, 4});

    auto zero = smith_normal_form(IntMatrix(2, 3));
    CHECK(zero.invariant_factors.empty());
}

TEST_CASE("smith invariant factors divide in a chain and multiply to |det|") {
    Sampler s(16);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix m(3, 3);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) m(r, c) = s.next_int(-5, 5);
        const Int d = det(m);
        const auto snf = smith_normal_form(m);
        for (std::size_t k = 0; k + 1 < snf.invariant_factors.size(); ++k)
            CHECK(snf.invariant_factors[k + 1] % snf.invariant_factors[k] == 0);
        if (d != 0) {
            Int prod = 1;
            for (const auto& f : snf.invariant_factors) prod *= f;
            CHECK(prod == abs(d));
            CHECK(snf.invariant_factors.size() == 3);
        }
    }
}

TEST_CASE("integer row span membership") {
    const IntMatrix m = int_matrix({{2, 0}, {0, 1}});
    auto present = in_integer_row_span({2, 3}, m);
    REQUIRE(present.has_value());
    CHECK(*present == std::vector<Int>{1, 3});
    CHECK_FALSE(in_integer_row_span({1, 0}, m).has_value());

    const IntMatrix single = int_matrix({{1, 1}});
    CHECK_FALSE(in_integer_row_span({1, 0}, single).has_value());
    CHECK(in_integer_row_span({0, 0}, single).has_value());

    CHECK_THROWS_AS(in_integer_row_span({1, 2, 3}, m), Error);
}

TEST_CASE("every row lies in the row span; coefficients reproduce the vector") {
    Sampler s(17);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(s.next_int(1, 4));
        const std::size_t cols = static_cast<std::size_t>(s.next_int(1, 6));
        IntMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = s.next_int(-3, 3);
        for (std::size_t r = 0; r < rows; ++r) {
            std::vector<Int> v(cols);
            for (std::size_t c = 0; c < cols; ++c) v[c] = m(r, c);
            auto coeff = in_integer_row_span(v, m);
            REQUIRE(coeff.has_value());
            for (std::size_t c = 0; c < cols; ++c) {
                Int dot = 0;
                for (std::size_t k = 0; k < rows; ++k) dot += (*coeff)[k] * m(k, c);
                CHECK(dot == v[c]);
            }
        }
        // Random integer combinations are members too.
        std::vector<Int> combo(cols, 0);
        for (std::size_t k = 0; k < rows; ++k) {
            const long c = s.next_int(-4, 4);
            for (std::size_t j = 0; j < cols; ++j) combo[j] += c * m(k, j);
        }
        auto coeff = in_integer_row_span(combo, m);
        REQUIRE(coeff.has_value());
        for (std::size_t j = 0; j < cols; ++j) {
            Int dot = 0;
            for (std::size_t k = 0; k < rows; ++k) dot += (*coeff)[k] * m(k, j);
            CHECK(dot == combo[j]);
        }
    }
}

TEST_CASE("symmetric storage is structural") {
    SymMatrix m(3);
    m.set(3, 1, q(5));
    CHECK(m.at(1, 3) == q(5));
    CHECK(m.at(3, 1) == q(5));
    CHECK_THROWS_AS(m.at(0, 1), Error);
    CHECK_THROWS_AS(m.at(1, 4), Error);
}
