#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hypcy/exact/golden.hpp"

namespace hypcy {

/// Dense row-major matrix over Q(sqrt 5).
class GoldenMatrix {
public:
    GoldenMatrix() = default;
    GoldenMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    static GoldenMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GoldenScalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const GoldenScalar& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    GoldenMatrix transpose() const;
    GoldenMatrix operator*(const GoldenMatrix& o) const;
    GoldenMatrix operator+(const GoldenMatrix& o) const;
    GoldenMatrix operator-(const GoldenMatrix& o) const;
    GoldenMatrix scaled(const GoldenScalar& s) const;
    std::vector<GoldenScalar> apply(const std::vector<GoldenScalar>& v) const;

    bool is_symmetric() const;
    bool is_identity() const;
    /// Exact determinant by Gaussian elimination over the field.
    GoldenScalar determinant() const;
    /// Throws std::domain_error when singular.
    GoldenMatrix inverse() const;

    friend bool operator==(const GoldenMatrix& a, const GoldenMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const GoldenMatrix& a, const GoldenMatrix& b) { return !(a == b); }
    /// Lexicographic order on entries (each compared by lex_less); canonical, not geometric.
    friend bool lex_less(const GoldenMatrix& a, const GoldenMatrix& b);

    std::size_t hash() const;
    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<GoldenScalar> data_;
};

}  // namespace hypcy
