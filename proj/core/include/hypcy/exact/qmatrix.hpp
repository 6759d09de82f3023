#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypcy/exact/rational.hpp"

namespace hypcy {

/// Dense row-major rational matrix.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}
    static QMatrix identity(int n);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static QMatrix from_columns(int rows, const std::vector<std::vector<Rational>>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix scaled(const Rational& s) const;
    QMatrix transpose() const;
    std::vector<Rational> column(int c) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    bool is_zero() const;
    bool is_identity() const;
    bool is_antisymmetric() const;

    /// Reduced row echelon form in place; returns the pivot columns.
    std::vector<int> rref();
    int rank() const;
    Rational determinant() const;
    /// Basis of {x : A x = 0}, one vector per free column, deterministic.
    std::vector<std::vector<Rational>> nullspace() const;
    /// Some x with A x = b, or empty optional-like flag false.
    bool solve(const std::vector<Rational>& b, std::vector<Rational>& x) const;

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

/// A sparse linear equation sum_j row[j] * x_j = 0.
using SparseRow = std::map<int, Rational>;

/**
 * Incremental sparse Gaussian elimination for homogeneous systems. Rows are
 * kept fully reduced against each other, so the nullspace can be read off
 * directly at the end.
 */
class SparseEliminator {
public:
    explicit SparseEliminator(int ncols) : ncols_(ncols), pivot_row_(ncols, -1) {}
    /// Adds an equation; returns false when it was already implied.
    bool add(SparseRow row);
    int rank() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }
    std::vector<std::vector<Rational>> nullspace() const;

private:
    void reduce(SparseRow& row) const;
    int ncols_;
    std::vector<SparseRow> rows_;
    std::vector<int> pivot_row_;
};

}  // namespace hypcy
