#pragma once

#include "arrlocal/error.hpp"
#include "arrlocal/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace arrlocal {

// Dense row-major matrix. Used with Rational (QMatrix) and CycloElem
// (CycloMatrix) entries.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw ShapeError("matrix entries length " + std::to_string(data_.size()) + " != " +
                             std::to_string(rows_) + "x" + std::to_string(cols_));
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    const std::vector<T>& entries() const noexcept { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using QVector = std::vector<Rational>;

QMatrix identity(std::size_t n);
QMatrix scalar_matrix(std::size_t n, const Rational& s);
QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const Rational& s, const QMatrix& a);
QVector operator*(const QMatrix& a, const QVector& v);
bool is_zero(const QMatrix& a);
QMatrix commutator(const QMatrix& a, const QMatrix& b);

// Builds a matrix from row vectors of equal length.
QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);

std::string to_string(const QMatrix& m);

struct RankKernel {
    std::size_t rank = 0;
    std::vector<QVector> kernel_basis;
};

// Exact rank and a kernel basis (right null space), via the fraction-free
// elimination kernel.
RankKernel rank_and_kernel(const QMatrix& m);

std::size_t rank(const QMatrix& m);

// Row-reduced echelon form over Q, with pivot columns.
struct RowEchelon {
    QMatrix reduced;
    std::vector<std::size_t> pivots;
};
RowEchelon rref(const QMatrix& m);

} // namespace arrlocal
