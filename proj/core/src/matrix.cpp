#include "gci/matrix.hpp"

#include "gci/error.hpp"

namespace gci {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

const Rational& RatMatrix::operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
}

Rational& RatMatrix::operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool RatMatrix::operator==(const RatMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (data_[k] != other.data_[k]) return false;
    return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows())
        throw Error(ErrorKind::Dimension, "matrix product shape mismatch");
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(r, k) == 0) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) {
                Rational t = a(r, k) * b(k, c);
                out(r, c) += t;
            }
        }
    return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorKind::Dimension, "matrix difference shape mismatch");
    RatMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
    return out;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

const Int& IntMatrix::operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
}

Int& IntMatrix::operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

RatMatrix IntMatrix::to_rational() const {
    RatMatrix out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(r, c) = Rational((*this)(r, c));
    return out;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (data_[k] != other.data_[k]) return false;
    return true;
}

SymMatrix::SymMatrix(int n) : n_(n) {
    if (n < 1) throw Error(ErrorKind::Dimension, "matrix dimension must be >= 1");
    upper_.assign(static_cast<std::size_t>(n) * (n + 1) / 2, Rational(0));
}

SymMatrix SymMatrix::identity(int n) {
    SymMatrix m(n);
    for (int i = 1; i <= n; ++i) m.set(i, i, Rational(1));
    return m;
}

std::size_t SymMatrix::index(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_)
        throw Error(ErrorKind::Bounds, "index (" + std::to_string(i) + "," +
                                           std::to_string(j) + ") outside 1.." +
                                           std::to_string(n_));
    if (i > j) std::swap(i, j);
    const std::size_t row_offset =
        static_cast<std::size_t>(i - 1) * n_ - static_cast<std::size_t>(i - 1) * (i - 2) / 2;
    return row_offset + static_cast<std::size_t>(j - i);
}

const Rational& SymMatrix::at(int i, int j) const { return upper_[index(i, j)]; }

void SymMatrix::set(int i, int j, const Rational& value) { upper_[index(i, j)] = value; }

bool SymMatrix::operator==(const SymMatrix& other) const {
    if (n_ != other.n_) return false;
    for (std::size_t k = 0; k < upper_.size(); ++k)
        if (upper_[k] != other.upper_[k]) return false;
    return true;
}

RatMatrix submatrix(const SymMatrix& sigma, const std::vector<int>& row_idx,
                    const std::vector<int>& col_idx) {
    RatMatrix out(row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r)
        for (std::size_t c = 0; c < col_idx.size(); ++c)
            out(r, c) = sigma.at(row_idx[r], col_idx[c]);
    return out;
}

}  // namespace gci
