#include "hypcy/complex/subdivision.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "hypcy/coxeter/polytope.hpp"

namespace hypcy {

namespace {

using Chain = std::vector<std::pair<int, int>>;

struct ChainHash {
    std::size_t operator()(const Chain& c) const noexcept {
        std::size_t h = c.size();
        for (const auto& [k, x] : c) hash_combine(h, static_cast<std::size_t>(k) * 1000003u + static_cast<std::size_t>(x));
        return h;
    }
};

struct ChainTable {
    std::vector<Chain> chains;
    std::unordered_map<Chain, int, ChainHash> index;

    int find(const Chain& c) const {
        auto it = index.find(c);
        if (it == index.end()) throw std::logic_error("subdivision: chain image is not a chain");
        return it->second;
    }
};

ChainTable enumerate_chains(const RegularComplex& X) {
    ChainTable T;
    // closure of every cell, proper parts only, by dimension
    std::vector<std::vector<std::vector<std::vector<int>>>> cl(X.dim() + 1);
    for (int k = 0; k <= X.dim(); ++k)
        for (int c = 0; c < X.count(k); ++c) cl[k].push_back(X.closure(k, c));

    Chain cur;
    // extend downward from (k, c); chains are stored bottom-up
    auto rec = [&](auto&& self, int k, int c) -> void {
        cur.push_back({k, c});
        Chain up(cur.rbegin(), cur.rend());
        T.index.emplace(up, static_cast<int>(T.chains.size()));
        T.chains.push_back(std::move(up));
        for (int d = 0; d < k; ++d)
            for (int x : cl[k][c][d]) self(self, d, x);
        cur.pop_back();
    };
    for (int k = 0; k <= X.dim(); ++k)
        for (int c = 0; c < X.count(k); ++c) rec(rec, k, c);
    return T;
}

Chain apply(const CellPerm& p, const Chain& s) {
    Chain r;
    r.reserve(s.size());
    for (const auto& [k, x] : s) {
        int y = p(k, x);
        if (y < 0) throw std::logic_error("subdivision: map undefined on chain");
        r.push_back({k, y});
    }
    return r;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

FlagComplex assemble(const ChainTable& T, UnionFind& uf, int top_dim) {
    FlagComplex F;
    F.chains.resize(top_dim + 1);
    std::vector<int> cls(T.chains.size(), -1);
    // classes numbered by their least chain, grouped by simplex dimension
    std::vector<int> rep_index(T.chains.size(), -1);
    for (int i = 0; i < static_cast<int>(T.chains.size()); ++i) {
        const int r = uf.find(i);
        if (rep_index[r] < 0) {
            const int d = static_cast<int>(T.chains[r].size()) - 1;
            rep_index[r] = static_cast<int>(F.chains[d].size());
            F.chains[d].push_back(T.chains[r]);
        }
        cls[i] = rep_index[r];
    }
    std::vector<int> counts;
    for (const auto& v : F.chains) counts.push_back(static_cast<int>(v.size()));
    F.cw = CwComplex::with_counts(counts);
    for (int d = 1; d <= top_dim; ++d)
        for (int s = 0; s < counts[d]; ++s) {
            const Chain& ch = F.chains[d][s];
            for (int i = 0; i <= d; ++i) {
                Chain face = ch;
                face.erase(face.begin() + i);
                F.cw.boundary[d].add(cls[T.find(face)], s, (i % 2) ? -1 : 1);
            }
        }
    std::string w;
    if (!F.cw.boundary_squares_to_zero(&w)) throw std::logic_error("subdivision: " + w);
    return F;
}

}  // namespace

FlagComplex barycentric_subdivision(const RegularComplex& X) {
    ChainTable T = enumerate_chains(X);
    UnionFind uf(static_cast<int>(T.chains.size()));
    return assemble(T, uf, X.dim());
}

FlagComplex barycentric_subdivision(const FaceLattice& L) { return barycentric_subdivision(regular_complex(L)); }

FlagComplex subdivided_quotient(const QuotientComplex& q, const CellPerm* extra) {
    const RegularComplex& X = q.base();
    ChainTable T = enumerate_chains(X);
    UnionFind uf(static_cast<int>(T.chains.size()));
    for (int i = 0; i < static_cast<int>(T.chains.size()); ++i) {
        const Chain& s = T.chains[i];
        const auto [kt, t] = s.back();
        for (int g : q.gluings_at(kt, t)) uf.unite(i, T.find(apply(q.spec().gluings[g].map, s)));
        if (extra) uf.unite(i, T.find(apply(*extra, s)));
    }
    return assemble(T, uf, X.dim());
}

}  // namespace hypcy
