#include "hypcy/exact/qmatrix.hpp"

#include <stdexcept>

namespace hypcy {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_columns(int rows, const std::vector<std::vector<Rational>>& cols) {
    QMatrix m(rows, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols_; ++c) {
        if (static_cast<int>(cols[c].size()) != rows) throw std::invalid_argument("QMatrix::from_columns: length mismatch");
        for (int r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: dimension mismatch in product");
    QMatrix p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (sgn(a) == 0) continue;
            for (int c = 0; c < o.cols_; ++c)
                if (sgn(o(k, c)) != 0) p(r, c) += a * o(k, c);
        }
    return p;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix: dimension mismatch in sum");
    QMatrix s = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
    return s;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix: dimension mismatch in difference");
    QMatrix s = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] -= o.data_[i];
    return s;
}

QMatrix QMatrix::scaled(const Rational& s) const {
    QMatrix r = *this;
    for (auto& x : r.data_) x *= s;
    return r;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

std::vector<Rational> QMatrix::column(int c) const {
    std::vector<Rational> v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("QMatrix::apply: dimension mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (sgn(v[c]) != 0 && sgn((*this)(r, c)) != 0) out[r] += (*this)(r, c) * v[c];
    return out;
}

bool QMatrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

bool QMatrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

bool QMatrix::is_antisymmetric() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r; c < cols_; ++c)
            if ((*this)(r, c) != -(*this)(c, r)) return false;
    return true;
}

std::vector<int> QMatrix::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int piv = -1;
        for (int r = row; r < rows_; ++r)
            if (sgn((*this)(r, col)) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < cols_; ++c) std::swap((*this)(piv, c), (*this)(row, c));
        Rational inv = 1 / (*this)(row, col);
        for (int c = col; c < cols_; ++c) (*this)(row, c) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row || sgn((*this)(r, col)) == 0) continue;
            Rational f = (*this)(r, col);
            for (int c = col; c < cols_; ++c)
                if (sgn((*this)(row, c)) != 0) (*this)(r, c) -= f * (*this)(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int QMatrix::rank() const {
    QMatrix t = *this;
    return static_cast<int>(t.rref().size());
}

Rational QMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("QMatrix: determinant of non-square matrix");
    QMatrix a = *this;
    Rational det = 1;
    for (int col = 0; col < cols_; ++col) {
        int piv = -1;
        for (int r = col; r < rows_; ++r)
            if (sgn(a(r, col)) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int c = 0; c < cols_; ++c) std::swap(a(piv, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        for (int r = col + 1; r < rows_; ++r) {
            if (sgn(a(r, col)) == 0) continue;
            Rational f = a(r, col) / a(col, col);
            for (int c = col; c < cols_; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

std::vector<std::vector<Rational>> QMatrix::nullspace() const {
    QMatrix a = *this;
    std::vector<int> pivots = a.rref();
    std::vector<int> pivot_of(cols_, -1);
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i) pivot_of[pivots[i]] = i;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (pivot_of[free] >= 0) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[free] = 1;
        for (int i = 0; i < static_cast<int>(pivots.size()); ++i) v[pivots[i]] = -a(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool QMatrix::solve(const std::vector<Rational>& b, std::vector<Rational>& x) const {
    if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("QMatrix::solve: dimension mismatch");
    QMatrix aug(rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
        aug(r, cols_) = b[r];
    }
    std::vector<int> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return false;
    x.assign(cols_, Rational(0));
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i) x[pivots[i]] = aug(i, cols_);
    return true;
}

std::string QMatrix::to_string() const {
    std::string s = "[";
    for (int r = 0; r < rows_; ++r) {
        s += r ? ", [" : "[";
        for (int c = 0; c < cols_; ++c) {
            if (c) s += ", ";
            s += (*this)(r, c).get_str();
        }
        s += "]";
    }
    return s + "]";
}

void SparseEliminator::reduce(SparseRow& row) const {
    // Existing rows are fully reduced, so one pass in column order suffices.
    for (auto it = row.begin(); it != row.end();) {
        const int col = it->first;
        const int pr = pivot_row_[col];
        if (pr < 0) {
            ++it;
            continue;
        }
        const Rational f = it->second;  // pivot rows are normalized to 1
        for (const auto& [c, v] : rows_[pr]) {
            Rational& e = row[c];
            e -= f * v;
        }
        // erase zeros; restart after the current column
        for (auto jt = row.begin(); jt != row.end();) {
            if (sgn(jt->second) == 0) jt = row.erase(jt);
            else ++jt;
        }
        it = row.upper_bound(col);
    }
}

bool SparseEliminator::add(SparseRow row) {
    for (auto it = row.begin(); it != row.end();) {
        if (it->first < 0 || it->first >= ncols_) throw std::out_of_range("SparseEliminator: column out of range");
        if (sgn(it->second) == 0) it = row.erase(it);
        else ++it;
    }
    reduce(row);
    if (row.empty()) return false;
    const int col = row.begin()->first;
    const Rational inv = 1 / row.begin()->second;
    for (auto& [c, v] : row) v *= inv;
    // back-substitute into earlier rows to keep the system fully reduced
    for (auto& other : rows_) {
        auto hit = other.find(col);
        if (hit == other.end()) continue;
        const Rational f = hit->second;
        for (const auto& [c, v] : row) other[c] -= f * v;
        for (auto jt = other.begin(); jt != other.end();) {
            if (sgn(jt->second) == 0) jt = other.erase(jt);
            else ++jt;
        }
    }
    pivot_row_[col] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

std::vector<std::vector<Rational>> SparseEliminator::nullspace() const {
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < ncols_; ++free) {
        if (pivot_row_[free] >= 0) continue;
        std::vector<Rational> v(ncols_, Rational(0));
        v[free] = 1;
        for (const auto& row : rows_) {
            auto hit = row.find(free);
            if (hit != row.end()) v[row.begin()->first] = -hit->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace hypcy
