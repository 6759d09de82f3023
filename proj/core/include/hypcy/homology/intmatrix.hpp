#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypcy/exact/qmatrix.hpp"
#include "hypcy/exact/rational.hpp"

namespace hypcy {

/// Sparse integer matrix stored by columns.
class IntMatrix {
public:
    using Column = std::map<int, Integer>;

    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(cols) {}
    static IntMatrix identity(int n);
    static IntMatrix from_dense(const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nnz() const;

    Integer get(int r, int c) const;
    void set(int r, int c, const Integer& v);
    void add(int r, int c, const Integer& v);
    const Column& column(int c) const { return data_[c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;
    /// Every column has exactly one entry, equal to +-1, and rows are hit once.
    bool is_signed_permutation() const;

    std::vector<std::vector<Integer>> to_dense() const;
    QMatrix to_rational() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }
    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Column> data_;
};

/// Finitely generated abelian group Z^rank + sum Z/d_i with d_1 | d_2 | ...
struct FgAbGroup {
    int rank = 0;
    std::vector<long> torsion;

    static FgAbGroup free(int r) { return {r, {}}; }
    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    bool is_free() const { return torsion.empty(); }
    /// Canonical form from arbitrary cyclic orders (1s dropped, divisibility chain).
    static FgAbGroup from_cyclic(int rank, std::vector<long> orders);
    friend bool operator==(const FgAbGroup& a, const FgAbGroup& b) { return a.rank == b.rank && a.torsion == b.torsion; }
    friend bool operator!=(const FgAbGroup& a, const FgAbGroup& b) { return !(a == b); }
    /// "0", "Z", "Z^4", "Z + Z/2", ...
    std::string to_string() const;
    nlohmann::json to_json() const;
    static FgAbGroup from_json(const nlohmann::json& j);
};

}  // namespace hypcy
