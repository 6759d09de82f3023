#include "hypcy/geom/golden_matrix.hpp"

#include <stdexcept>

namespace hypcy {

GoldenMatrix GoldenMatrix::identity(int n) {
    GoldenMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

GoldenMatrix GoldenMatrix::transpose() const {
    GoldenMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

GoldenMatrix GoldenMatrix::operator*(const GoldenMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("GoldenMatrix: dimension mismatch in product");
    GoldenMatrix p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const GoldenScalar& a = (*this)(r, k);
            if (a.is_zero()) continue;
            for (int c = 0; c < o.cols_; ++c)
                if (!o(k, c).is_zero()) p(r, c) += a * o(k, c);
        }
    return p;
}

GoldenMatrix GoldenMatrix::operator+(const GoldenMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("GoldenMatrix: dimension mismatch in sum");
    GoldenMatrix s = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
    return s;
}

GoldenMatrix GoldenMatrix::operator-(const GoldenMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("GoldenMatrix: dimension mismatch in difference");
    GoldenMatrix s = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] -= o.data_[i];
    return s;
}

GoldenMatrix GoldenMatrix::scaled(const GoldenScalar& s) const {
    GoldenMatrix r = *this;
    for (auto& x : r.data_) x *= s;
    return r;
}

std::vector<GoldenScalar> GoldenMatrix::apply(const std::vector<GoldenScalar>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("GoldenMatrix: dimension mismatch in apply");
    std::vector<GoldenScalar> out(rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
}

bool GoldenMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
}

bool GoldenMatrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

GoldenScalar GoldenMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("GoldenMatrix: determinant of non-square matrix");
    GoldenMatrix a = *this;
    GoldenScalar det(1);
    const int n = rows_;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return GoldenScalar();
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        GoldenScalar inv = a(col, col).inverse();
        for (int r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            GoldenScalar f = a(r, col) * inv;
            for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

GoldenMatrix GoldenMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("GoldenMatrix: inverse of non-square matrix");
    const int n = rows_;
    GoldenMatrix a = *this;
    GoldenMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("GoldenMatrix: singular matrix");
        for (int c = 0; c < n; ++c) {
            std::swap(a(piv, c), a(col, c));
            std::swap(inv(piv, c), inv(col, c));
        }
        GoldenScalar p = a(col, col).inverse();
        for (int c = 0; c < n; ++c) {
            a(col, c) *= p;
            inv(col, c) *= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            GoldenScalar f = a(r, col);
            for (int c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

bool lex_less(const GoldenMatrix& a, const GoldenMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
        if (lex_less(a.data_[i], b.data_[i])) return true;
        if (lex_less(b.data_[i], a.data_[i])) return false;
    }
    return false;
}

std::size_t GoldenMatrix::hash() const {
    std::size_t h = static_cast<std::size_t>(rows_) * 31 + cols_;
    for (const auto& x : data_) hash_combine(h, x.hash());
    return h;
}

std::string GoldenMatrix::to_string() const {
    std::string s = "[";
    for (int r = 0; r < rows_; ++r) {
        s += r ? ", [" : "[";
        for (int c = 0; c < cols_; ++c) {
            if (c) s += ", ";
            s += (*this)(r, c).to_string();
        }
        s += "]";
    }
    return s + "]";
}

}  // namespace hypcy
