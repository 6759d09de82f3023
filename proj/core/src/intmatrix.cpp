#include "hypcy/homology/intmatrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hypcy {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.data_[i][i] = 1;
    return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<long>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("IntMatrix::from_dense: ragged rows");
        for (int j = 0; j < c; ++j)
            if (rows[i][j] != 0) m.data_[j][i] = rows[i][j];
    }
    return m;
}

std::size_t IntMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& c : data_) n += c.size();
    return n;
}

Integer IntMatrix::get(int r, int c) const {
    auto it = data_.at(c).find(r);
    return it == data_[c].end() ? Integer(0) : it->second;
}

void IntMatrix::set(int r, int c, const Integer& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("IntMatrix::set");
    if (v == 0) data_[c].erase(r);
    else data_[c][r] = v;
}

void IntMatrix::add(int r, int c, const Integer& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("IntMatrix::add");
    auto& col = data_[c];
    auto it = col.find(r);
    if (it == col.end()) {
        if (v != 0) col.emplace(r, v);
        return;
    }
    it->second += v;
    if (it->second == 0) col.erase(it);
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix p(rows_, o.cols_);
    for (int c = 0; c < o.cols_; ++c) {
        auto& out = p.data_[c];
        for (const auto& [k, v] : o.data_[c])
            for (const auto& [r, a] : data_[k]) out[r] += a * v;
        for (auto it = out.begin(); it != out.end();) {
            if (it->second == 0) it = out.erase(it);
            else ++it;
        }
    }
    return p;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMatrix: dimension mismatch in sum");
    IntMatrix s = *this;
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : o.data_[c]) s.add(r, c, v);
    return s;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMatrix: dimension mismatch in difference");
    IntMatrix s = *this;
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : o.data_[c]) s.add(r, c, -v);
    return s;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : data_[c]) t.data_[r][c] = v;
    return t;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Column& c) { return c.empty(); });
}

bool IntMatrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

bool IntMatrix::is_signed_permutation() const {
    if (rows_ != cols_) return false;
    std::vector<bool> hit(rows_, false);
    for (const auto& col : data_) {
        if (col.size() != 1) return false;
        const auto& [r, v] = *col.begin();
        if (abs(v) != 1 || hit[r]) return false;
        hit[r] = true;
    }
    return true;
}

std::vector<std::vector<Integer>> IntMatrix::to_dense() const {
    std::vector<std::vector<Integer>> d(rows_, std::vector<Integer>(cols_, 0));
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : data_[c]) d[r][c] = v;
    return d;
}

QMatrix IntMatrix::to_rational() const {
    QMatrix q(rows_, cols_);
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : data_[c]) q(r, c) = Rational(v);
    return q;
}

std::string IntMatrix::to_string() const {
    std::string s = "[";
    auto d = to_dense();
    for (int r = 0; r < rows_; ++r) {
        s += r ? ", [" : "[";
        for (int c = 0; c < cols_; ++c) {
            if (c) s += ", ";
            s += d[r][c].get_str();
        }
        s += "]";
    }
    return s + "]";
}

FgAbGroup FgAbGroup::from_cyclic(int rank, std::vector<long> orders) {
    // Split into prime powers, then recombine into the invariant-factor chain.
    std::map<long, std::vector<long>> by_prime;
    for (long d : orders) {
        if (d < 0) d = -d;
        if (d == 0) {
            ++rank;
            continue;
        }
        for (long p = 2; p * p <= d; ++p) {
            long q = 1;
            while (d % p == 0) {
                d /= p;
                q *= p;
            }
            if (q > 1) by_prime[p].push_back(q);
        }
        if (d > 1) by_prime[d].push_back(d);
    }
    std::size_t len = 0;
    for (auto& [p, qs] : by_prime) {
        std::sort(qs.begin(), qs.end());
        len = std::max(len, qs.size());
    }
    std::vector<long> chain(len, 1);
    for (auto& [p, qs] : by_prime)
        for (std::size_t i = 0; i < qs.size(); ++i) chain[len - qs.size() + i] *= qs[i];
    return {rank, chain};
}

std::string FgAbGroup::to_string() const {
    std::string s;
    if (rank == 1) s = "Z";
    else if (rank > 1) s = "Z^" + std::to_string(rank);
    for (long d : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + std::to_string(d);
    return s.empty() ? "0" : s;
}

nlohmann::json FgAbGroup::to_json() const { return {{"rank", rank}, {"torsion", torsion}}; }

FgAbGroup FgAbGroup::from_json(const nlohmann::json& j) {
    std::vector<long> t = j.value("torsion", std::vector<long>{});
    return from_cyclic(j.at("rank").get<int>(), t);
}

}  // namespace hypcy
