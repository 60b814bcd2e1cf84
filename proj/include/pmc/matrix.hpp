#ifndef PMC_MATRIX_HPP
#define PMC_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <pmc/errors.hpp>
#include <pmc/rational.hpp>

namespace pmc {

/// Dense row-major matrix over an exact scalar type (Rational or Integer).
/// Empty shapes (0 rows and/or 0 columns) are legal values; they show up as
/// degenerate cases of the rank-one factorizations.
template <typename T>
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw ShapeError("ragged initializer for matrix");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    /// All-ones matrix (J when square).
    static Matrix ones(std::size_t rows, std::size_t cols) {
        Matrix m(rows, cols);
        for (auto& e : m.entries_) e = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return entries_.empty(); }

    T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    T& at(std::size_t i, std::size_t j) {
        check_bounds(i, j);
        return entries_[i * cols_ + j];
    }
    const T& at(std::size_t i, std::size_t j) const {
        check_bounds(i, j);
        return entries_[i * cols_ + j];
    }

    const std::vector<T>& entries() const { return entries_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o, "addition");
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o, "subtraction");
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
        return *this;
    }

    Matrix& operator*=(const T& scalar) {
        for (auto& e : entries_) e *= scalar;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { a += b; return a; }
    friend Matrix operator-(Matrix a, const Matrix& b) { a -= b; return a; }
    friend Matrix operator*(Matrix a, const T& s) { a *= s; return a; }
    friend Matrix operator*(const T& s, Matrix a) { a *= s; return a; }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& e : r.entries_) e = -e;
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw ShapeError("matrix product shape mismatch: " + a.shape_string() +
                             " * " + b.shape_string());
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string shape_string() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

private:
    void check_bounds(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_)
            throw DomainError("matrix index (" + std::to_string(i) + "," +
                              std::to_string(j) + ") out of range for " + shape_string());
    }

    void check_same_shape(const Matrix& o, const std::string& op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw ShapeError("shape mismatch for " + op + ": " + shape_string() +
                             " vs " + o.shape_string());
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> entries_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

/// Stacks two matrices side by side.
template <typename T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows())
        throw ShapeError("hstack row mismatch: " + a.shape_string() + " vs " + b.shape_string());
    Matrix<T> r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

/// Stacks two matrices on top of each other.
template <typename T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.cols())
        throw ShapeError("vstack column mismatch: " + a.shape_string() + " vs " + b.shape_string());
    Matrix<T> r(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
    return r;
}

} // namespace pmc

#endif // PMC_MATRIX_HPP
