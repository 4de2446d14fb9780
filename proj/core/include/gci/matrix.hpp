#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gci/rational.hpp"

namespace gci {

/// Dense rational matrix, 0-based, value semantics. Plumbing type: the
/// domain-facing covariance matrix is SymMatrix below.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& operator()(std::size_t r, std::size_t c) const;
    Rational& operator()(std::size_t r, std::size_t c);

    RatMatrix transposed() const;

    bool operator==(const RatMatrix& other) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);

/// Dense integer matrix with optional column labels (distinct when present).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Int& operator()(std::size_t r, std::size_t c) const;
    Int& operator()(std::size_t r, std::size_t c);

    std::vector<std::string>& col_labels() { return col_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }

    RatMatrix to_rational() const;

    bool operator==(const IntMatrix& other) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
    std::vector<std::string> col_labels_;  // empty or exactly cols_ distinct names
};

/// Symmetric n x n rational matrix with 1-based indices, stored as the upper
/// triangle. Entry (i,j) with i > j reads (j,i); symmetry is structural.
class SymMatrix {
public:
    explicit SymMatrix(int n);

    static SymMatrix identity(int n);

    int dim() const { return n_; }

    const Rational& at(int i, int j) const;
    void set(int i, int j, const Rational& value);

    bool operator==(const SymMatrix& other) const;

private:
    std::size_t index(int i, int j) const;

    int n_ = 0;
    std::vector<Rational> upper_;
};

/// Extracts sigma[rows, cols] into a dense 0-based matrix; indices 1-based.
RatMatrix submatrix(const SymMatrix& sigma, const std::vector<int>& row_idx,
                    const std::vector<int>& col_idx);

}  // namespace gci
