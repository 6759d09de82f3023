#include "hypcy/homology/snf.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace hypcy {

namespace {

thread_local bool g_used_bigint = false;

struct Checked {
    long v = 0;
    Checked() = default;
    Checked(long x) : v(x) {}  // NOLINT(google-explicit-constructor)
};

inline Checked operator+(Checked a, Checked b) {
    long r;
    if (__builtin_add_overflow(a.v, b.v, &r)) throw std::overflow_error("snf");
    return r;
}
inline Checked operator-(Checked a, Checked b) {
    long r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw std::overflow_error("snf");
    return r;
}
inline Checked operator*(Checked a, Checked b) {
    long r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw std::overflow_error("snf");
    return r;
}
inline Checked operator/(Checked a, Checked b) { return a.v / b.v; }
inline Checked operator%(Checked a, Checked b) { return a.v % b.v; }
inline Checked operator-(Checked a) {
    if (a.v == std::numeric_limits<long>::min()) throw std::overflow_error("snf");
    return -a.v;
}
inline bool is_zero(Checked a) { return a.v == 0; }
inline bool is_zero(const Integer& a) { return a == 0; }
inline bool is_neg(Checked a) { return a.v < 0; }
inline bool is_neg(const Integer& a) { return a < 0; }
inline Checked magnitude(Checked a) { return a.v < 0 ? -a : a; }
inline Integer magnitude(const Integer& a) { return abs(a); }
inline bool less(Checked a, Checked b) { return a.v < b.v; }
inline bool less(const Integer& a, const Integer& b) { return a < b; }
inline Integer to_integer(Checked a) { return Integer(a.v); }
inline Integer to_integer(const Integer& a) { return a; }
inline Integer tdiv(const Integer& a, const Integer& b) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
inline Checked tdiv(Checked a, Checked b) { return a / b; }
inline bool divides(const Integer& d, const Integer& a) { return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0; }
inline bool divides(Checked d, Checked a) { return a.v % d.v == 0; }

template <class T>
using Dense = std::vector<std::vector<T>>;

template <class T>
Dense<T> identity_dense(int n) {
    Dense<T> m(n, std::vector<T>(n, T(0L)));
    for (int i = 0; i < n; ++i) m[i][i] = T(1L);
    return m;
}

template <class T>
void snf_dense(Dense<T>& a, Dense<T>* U, Dense<T>* V, int m, int n) {
    auto row_axpy = [&](int dst, int src, const T& q) {  // row dst -= q * row src
        for (int j = 0; j < n; ++j)
            if (!is_zero(a[src][j])) a[dst][j] = a[dst][j] - q * a[src][j];
        if (U)
            for (int j = 0; j < m; ++j)
                if (!is_zero((*U)[src][j])) (*U)[dst][j] = (*U)[dst][j] - q * (*U)[src][j];
    };
    auto col_axpy = [&](int dst, int src, const T& q) {  // col dst -= q * col src
        for (int i = 0; i < m; ++i)
            if (!is_zero(a[i][src])) a[i][dst] = a[i][dst] - q * a[i][src];
        if (V)
            for (int i = 0; i < n; ++i)
                if (!is_zero((*V)[i][src])) (*V)[i][dst] = (*V)[i][dst] - q * (*V)[i][src];
    };
    auto swap_rows = [&](int i, int j) {
        std::swap(a[i], a[j]);
        if (U) std::swap((*U)[i], (*U)[j]);
    };
    auto swap_cols = [&](int i, int j) {
        for (int r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
        if (V)
            for (int r = 0; r < n; ++r) std::swap((*V)[r][i], (*V)[r][j]);
    };

    const int steps = std::min(m, n);
    for (int t = 0; t < steps; ++t) {
        for (;;) {
            int pi = -1, pj = -1;
            T best(0L);
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    if (is_zero(a[i][j])) continue;
                    T mag = magnitude(a[i][j]);
                    if (pi < 0 || less(mag, best)) {
                        best = mag;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) return;
            if (pi != t) swap_rows(pi, t);
            if (pj != t) swap_cols(pj, t);
            bool dirty = false;
            for (int i = t + 1; i < m; ++i) {
                if (is_zero(a[i][t])) continue;
                row_axpy(i, t, tdiv(a[i][t], a[t][t]));
                if (!is_zero(a[i][t])) dirty = true;
            }
            for (int j = t + 1; j < n; ++j) {
                if (is_zero(a[t][j])) continue;
                col_axpy(j, t, tdiv(a[t][j], a[t][t]));
                if (!is_zero(a[t][j])) dirty = true;
            }
            if (dirty) continue;
            int bad = -1;
            for (int i = t + 1; i < m && bad < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (!is_zero(a[i][j]) && !divides(a[t][t], a[i][j])) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            row_axpy(t, bad, T(-1L));  // row t += row bad
        }
        if (is_neg(a[t][t])) {
            for (int j = 0; j < n; ++j) a[t][j] = -a[t][j];
            if (U)
                for (int j = 0; j < m; ++j) (*U)[t][j] = -(*U)[t][j];
        }
    }
}

template <class T>
IntMatrix to_int(const Dense<T>& d, int rows, int cols) {
    IntMatrix out(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (!is_zero(d[i][j])) out.set(i, j, to_integer(d[i][j]));
    return out;
}

template <class T>
SnfResult snf_with(const IntMatrix& A) {
    const int m = A.rows(), n = A.cols();
    Dense<T> a(m, std::vector<T>(n, T(0L)));
    for (int c = 0; c < n; ++c)
        for (const auto& [r, v] : A.column(c)) {
            if constexpr (std::is_same_v<T, Checked>) {
                if (!v.fits_slong_p()) throw std::overflow_error("snf");
                a[r][c] = T(v.get_si());
            } else {
                a[r][c] = v;
            }
        }
    Dense<T> U = identity_dense<T>(m), V = identity_dense<T>(n);
    snf_dense(a, &U, &V, m, n);
    return {to_int(U, m, m), to_int(a, m, n), to_int(V, n, n)};
}

template <class T>
std::vector<Integer> factors_with(const Dense<T>& in, int m, int n) {
    Dense<T> a = in;
    snf_dense<T>(a, nullptr, nullptr, m, n);
    std::vector<Integer> f;
    for (int i = 0; i < std::min(m, n); ++i)
        if (!is_zero(a[i][i])) f.push_back(to_integer(a[i][i]));
    return f;
}

bool is_diagonal_chain(const IntMatrix& D) {
    Integer prev = 0;
    bool seen_zero = false;
    for (int c = 0; c < D.cols(); ++c) {
        const auto& col = D.column(c);
        if (col.empty()) {
            seen_zero = true;
            continue;
        }
        if (col.size() != 1 || col.begin()->first != c || col.begin()->second <= 0 || seen_zero) return false;
        const Integer& d = col.begin()->second;
        if (prev != 0 && !divides(prev, d)) return false;
        prev = d;
    }
    return true;
}

}  // namespace

std::vector<Integer> SnfResult::invariant_factors() const {
    std::vector<Integer> f;
    for (int i = 0; i < std::min(D.rows(), D.cols()); ++i) {
        Integer d = D.get(i, i);
        if (d != 0) f.push_back(d);
    }
    return f;
}

bool last_snf_used_bigint() { return g_used_bigint; }

SnfResult smith_normal_form(const IntMatrix& A) {
    SnfResult res;
    g_used_bigint = false;
    try {
        res = snf_with<Checked>(A);
    } catch (const std::overflow_error&) {
        g_used_bigint = true;
        res = snf_with<Integer>(A);
    }
    if (res.U * A * res.V != res.D) throw std::logic_error("smith_normal_form: U*A*V != D");
    if (!is_diagonal_chain(res.D)) throw std::logic_error("smith_normal_form: D is not a divisibility chain");
    return res;
}

namespace {

// Sparse elimination of unit pivots. Ring ops are on Integer for Z and on
// {0,1} for GF(2).
template <bool Mod2>
struct SparseElim {
    std::vector<std::unordered_map<int, Integer>> rows;
    std::vector<std::unordered_set<int>> cols;
    int units = 0;

    explicit SparseElim(const IntMatrix& A) : rows(A.rows()), cols(A.cols()) {
        for (int c = 0; c < A.cols(); ++c)
            for (const auto& [r, v] : A.column(c)) {
                Integer x = v;
                if constexpr (Mod2) {
                    x = (mpz_odd_p(v.get_mpz_t()) != 0) ? 1 : 0;
                    if (x == 0) continue;
                }
                rows[r][c] = x;
                cols[c].insert(r);
            }
    }

    static bool unit(const Integer& v) { return v == 1 || v == -1; }

    void pivot(int r, int c) {
        const Integer p = rows[r].at(c);
        std::vector<int> targets(cols[c].begin(), cols[c].end());
        for (int r2 : targets) {
            if (r2 == r) continue;
            Integer f = rows[r2].at(c) * p;  // p^{-1} == p
            for (const auto& [cc, v] : rows[r]) {
                Integer& e = rows[r2][cc];
                e -= f * v;
                if constexpr (Mod2) e = (mpz_odd_p(e.get_mpz_t()) != 0) ? 1 : 0;
                if (e == 0) {
                    rows[r2].erase(cc);
                    cols[cc].erase(r2);
                } else {
                    cols[cc].insert(r2);
                }
            }
        }
        for (const auto& [cc, v] : rows[r]) cols[cc].erase(r);
        rows[r].clear();
        ++units;
    }

    void run() {
        bool progress = true;
        while (progress) {
            progress = false;
            using Item = std::pair<std::size_t, int>;
            std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
            for (int c = 0; c < static_cast<int>(cols.size()); ++c)
                if (!cols[c].empty()) pq.push({cols[c].size(), c});
            while (!pq.empty()) {
                auto [cnt, c] = pq.top();
                pq.pop();
                if (cols[c].empty()) continue;
                if (cols[c].size() != cnt) {
                    pq.push({cols[c].size(), c});
                    continue;
                }
                int best = -1;
                std::size_t best_len = 0;
                for (int r : cols[c]) {
                    if (!unit(rows[r].at(c))) continue;
                    if (best < 0 || rows[r].size() < best_len || (rows[r].size() == best_len && r < best)) {
                        best = r;
                        best_len = rows[r].size();
                    }
                }
                if (best < 0) continue;
                pivot(best, c);
                progress = true;
            }
        }
    }
};


// Same elimination on sorted int64 rows. Column lists are lazy and may hold
// stale rows; they are filtered when a column is pivoted. Throws on overflow.
template <bool Mod2>
struct FastElim {
    using Row = std::vector<std::pair<int, long>>;
    std::vector<Row> rows;
    std::vector<std::vector<int>> cols;
    int units = 0;

    explicit FastElim(const IntMatrix& A) : rows(A.rows()), cols(A.cols()) {
        for (int c = 0; c < A.cols(); ++c)
            for (const auto& [r, v] : A.column(c)) {
                if (!v.fits_slong_p()) throw std::overflow_error("snf");
                long x = v.get_si();
                if constexpr (Mod2) x &= 1;
                if (x == 0) continue;
                rows[r].push_back({c, x});
                cols[c].push_back(r);
            }
    }

    static long entry(const Row& row, int c) {
        auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(c, std::numeric_limits<long>::min()));
        return (it != row.end() && it->first == c) ? it->second : 0;
    }

    // live rows of column c, deduplicated
    std::vector<int>& live(int c) {
        auto& l = cols[c];
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        l.erase(std::remove_if(l.begin(), l.end(), [&](int r) { return entry(rows[r], c) == 0; }), l.end());
        return l;
    }

    void pivot(int r, int c) {
        const long p = entry(rows[r], c);
        const Row prow = rows[r];
        Row merged;
        for (int r2 : std::vector<int>(cols[c])) {
            if (r2 == r) continue;
            const long f = entry(rows[r2], c) * p;
            const Row& a = rows[r2];
            merged.clear();
            std::size_t i = 0, j = 0;
            while (i < a.size() || j < prow.size()) {
                if (j == prow.size() || (i < a.size() && a[i].first < prow[j].first)) {
                    merged.push_back(a[i++]);
                    continue;
                }
                long sub, e;
                if (__builtin_mul_overflow(f, prow[j].second, &sub)) throw std::overflow_error("snf");
                const int cc = prow[j].first;
                if (i < a.size() && a[i].first == cc) {
                    if (__builtin_sub_overflow(a[i].second, sub, &e)) throw std::overflow_error("snf");
                    ++i;
                } else {
                    if (__builtin_sub_overflow(0L, sub, &e)) throw std::overflow_error("snf");
                    cols[cc].push_back(r2);
                }
                if constexpr (Mod2) e &= 1;
                if (e != 0) merged.push_back({cc, e});
                ++j;
            }
            rows[r2].swap(merged);
        }
        rows[r].clear();
        cols[c].clear();
        ++units;
    }

    void run() {
        bool progress = true;
        while (progress) {
            progress = false;
            using Item = std::pair<std::size_t, int>;
            std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
            for (int c = 0; c < static_cast<int>(cols.size()); ++c)
                if (!live(c).empty()) pq.push({cols[c].size(), c});
            while (!pq.empty()) {
                auto [cnt, c] = pq.top();
                pq.pop();
                if (cols[c].size() != cnt) {
                    if (!live(c).empty()) pq.push({cols[c].size(), c});
                    continue;
                }
                if (live(c).size() != cnt) {
                    if (!cols[c].empty()) pq.push({cols[c].size(), c});
                    continue;
                }
                int best = -1;
                std::size_t best_len = 0;
                for (int r : cols[c]) {
                    const long v = entry(rows[r], c);
                    if (v != 1 && v != -1) continue;
                    if (best < 0 || rows[r].size() < best_len) {
                        best = r;
                        best_len = rows[r].size();
                    }
                }
                if (best < 0) continue;
                pivot(best, c);
                progress = true;
            }
        }
    }

    std::vector<std::pair<int, std::vector<std::pair<int, Integer>>>> remainder() const {
        std::vector<std::pair<int, std::vector<std::pair<int, Integer>>>> out;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r].empty()) continue;
            std::vector<std::pair<int, Integer>> row;
            for (const auto& [c, v] : rows[r]) row.push_back({c, Integer(v)});
            out.push_back({r, std::move(row)});
        }
        return out;
    }
};

template <class E>
std::vector<Integer> factors_after(const E& e, const std::vector<std::vector<std::pair<int, Integer>>>& rest_rows) {
    std::vector<int> cc;
    for (const auto& row : rest_rows)
        for (const auto& [c, v] : row) cc.push_back(c);
    std::sort(cc.begin(), cc.end());
    cc.erase(std::unique(cc.begin(), cc.end()), cc.end());
    std::vector<Integer> f(e.units, Integer(1));
    if (rest_rows.empty()) return f;
    IntMatrix rest(static_cast<int>(rest_rows.size()), static_cast<int>(cc.size()));
    for (int i = 0; i < static_cast<int>(rest_rows.size()); ++i)
        for (const auto& [c, v] : rest_rows[i])
            rest.set(i, static_cast<int>(std::lower_bound(cc.begin(), cc.end(), c) - cc.begin()), v);
    for (const Integer& d : smith_normal_form(rest).invariant_factors()) f.push_back(d);
    std::sort(f.begin(), f.end());
    return f;
}

}  // namespace

std::vector<Integer> invariant_factors(const IntMatrix& A) {
    try {
        FastElim<false> e(A);
        e.run();
        std::vector<std::vector<std::pair<int, Integer>>> rest;
        for (auto& [r, row] : e.remainder()) rest.push_back(std::move(row));
        return factors_after(e, rest);
    } catch (const std::overflow_error&) {
    }
    SparseElim<false> e(A);
    e.run();
    std::vector<std::vector<std::pair<int, Integer>>> rest;
    for (const auto& row : e.rows) {
        if (row.empty()) continue;
        std::vector<std::pair<int, Integer>> sorted(row.begin(), row.end());
        std::sort(sorted.begin(), sorted.end());
        rest.push_back(std::move(sorted));
    }
    return factors_after(e, rest);
}

int rank_mod2(const IntMatrix& A) {
    FastElim<true> e(A);
    e.run();
    // Over GF(2) every nonzero entry is a unit, so elimination is complete.
    return e.units;
}

}  // namespace hypcy
