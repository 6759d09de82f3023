#include "hypcy/coxeter/polytope.hpp"

#include <algorithm>
#include <map>
#include <cstdio>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hypcy {

namespace {

bool is_linear(const CoxeterDiagram& d) {
    for (const auto& [e, m] : d.labels)
        if (e.second != e.first + 1) return false;
    for (int i = 0; i + 1 < d.rank; ++i)
        if (d.label(i, i + 1) == 2) return false;
    return true;
}

}  // namespace

std::vector<int> FaceLattice::fvector() const {
    std::vector<int> f;
    for (int k = 0; k < dim_; ++k) f.push_back(count(k));
    return f;
}

std::vector<int> FaceLattice::stabilizer_generators(int k) const {
    std::vector<int> gens;
    for (int g = 0; g < dim_; ++g)
        if (g != k) gens.push_back(g);
    return gens;
}

bool FaceLattice::incident(int k, int cell, int face) const {
    const auto& f = faces_[k][cell];
    return std::binary_search(f.begin(), f.end(), face);
}

FaceLattice::Elem FaceLattice::act_elem(Elem g, Elem x) const {
    const auto& w = group_->word(g);
    for (auto it = w.rbegin(); it != w.rend(); ++it) x = group_->left_gen(*it, x);
    return x;
}

int FaceLattice::act(Elem g, int k, int cell) const {
    if (k == dim_) return 0;
    return cell_of_[k][act_elem(g, reps_[k][cell])];
}

std::vector<int> FaceLattice::subcells(int dim_cell, int cell, int k) const {
    std::set<int> cur{cell};
    for (int d = dim_cell; d > k; --d) {
        std::set<int> next;
        for (int c : cur)
            for (int f : faces_[d][c]) next.insert(f);
        cur.swap(next);
    }
    return {cur.begin(), cur.end()};
}

std::string FaceLattice::cell_id(int k, int cell) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "d%d_%04d", k, cell);
    return buf;
}

nlohmann::json FaceLattice::to_json() const {
    nlohmann::json cells = nlohmann::json::object();
    nlohmann::json inc = nlohmann::json::array();
    for (int k = 0; k <= dim_; ++k) {
        nlohmann::json ids = nlohmann::json::array();
        for (int c = 0; c < count(k); ++c) ids.push_back(cell_id(k, c));
        cells[std::to_string(k)] = ids;
        if (k > 0)
            for (int c = 0; c < count(k); ++c)
                for (int f : faces_[k][c]) inc.push_back({cell_id(k, c), cell_id(k - 1, f)});
    }
    return {{"cells", cells}, {"incidence", inc}, {"fvector", fvector()}};
}

FaceLattice build_polytope(std::shared_ptr<const ReflectionGroup> g) {
    const CoxeterDiagram& d = g->diagram();
    if (!is_linear(d)) throw std::invalid_argument("build_polytope: diagram must be a linear chain");
    if (g->num_generators() != d.rank) throw std::invalid_argument("build_polytope: generator count mismatch");

    FaceLattice L;
    L.dim_ = d.rank;
    L.group_ = g;
    const std::size_t N = g->order();
    L.reps_.resize(L.dim_ + 1);
    L.cell_of_.resize(L.dim_ + 1);
    L.faces_.resize(L.dim_ + 1);
    L.cofaces_.resize(L.dim_ + 1);

    for (int k = 0; k < L.dim_; ++k) {
        // Union-find over right multiplication by the stabilizer generators.
        std::vector<FaceLattice::Elem> parent(N);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](FaceLattice::Elem x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (FaceLattice::Elem x = 0; x < N; ++x)
            for (int s : L.stabilizer_generators(k)) {
                FaceLattice::Elem a = find(x), b = find(g->right_gen(x, s));
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        // roots are the least elements of their cosets
        std::vector<int> id(N, -1);
        auto& reps = L.reps_[k];
        auto& cell_of = L.cell_of_[k];
        cell_of.resize(N);
        for (FaceLattice::Elem x = 0; x < N; ++x) {
            FaceLattice::Elem r = find(x);
            if (id[r] < 0) {
                id[r] = static_cast<int>(reps.size());
                reps.push_back(r);
            }
            cell_of[x] = id[r];
        }
    }
    L.reps_[L.dim_] = {0};
    L.cell_of_[L.dim_].assign(N, 0);

    for (int k = 1; k <= L.dim_; ++k) {
        std::vector<std::set<int>> faces(L.count(k));
        for (FaceLattice::Elem x = 0; x < N; ++x) faces[L.cell_of_[k][x]].insert(L.cell_of_[k - 1][x]);
        L.faces_[k].resize(L.count(k));
        L.cofaces_[k - 1].resize(L.count(k - 1));
        for (int c = 0; c < L.count(k); ++c) {
            L.faces_[k][c].assign(faces[c].begin(), faces[c].end());
            for (int f : faces[c]) L.cofaces_[k - 1][f].push_back(c);
        }
    }
    L.faces_[0].resize(L.count(0));
    L.cofaces_[L.dim_].resize(1);
    return L;
}

std::vector<int> incidence_degrees(const FaceLattice& L, int low, int high) {
    if (low < 0 || low >= high || high > L.dim()) throw std::invalid_argument("incidence_degrees: bad dimensions");
    std::vector<int> deg(L.count(low), 0);
    for (int c = 0; c < L.count(high); ++c)
        for (int f : L.subcells(high, c, low)) deg[f]++;
    return deg;
}

bool diamond_property(const FaceLattice& L, std::string* witness) {
    for (int k = 2; k <= L.dim(); ++k)
        for (int c = 0; c < L.count(k); ++c) {
            std::map<int, int> hits;
            for (int f : L.faces(k, c))
                for (int h : L.faces(k - 1, f)) hits[h]++;
            for (const auto& [h, n] : hits)
                if (n != 2) {
                    if (witness)
                        *witness = FaceLattice::cell_id(k, c) + " has face " + FaceLattice::cell_id(k - 2, h) + " under " +
                                   std::to_string(n) + " facets";
                    return false;
                }
        }
    // rank-1 diamond: every edge has exactly two vertices
    for (int c = 0; L.dim() >= 1 && c < L.count(1); ++c)
        if (L.faces(1, c).size() != 2) {
            if (witness) *witness = FaceLattice::cell_id(1, c) + " does not have two endpoints";
            return false;
        }
    return true;
}

FaceLattice build_120cell(std::shared_ptr<const ReflectionGroup> g) {
    const CoxeterDiagram h4 = CoxeterDiagram::linear({5, 3, 3});
    if (g->diagram().rank != 4 || g->diagram().labels != h4.labels || g->order() != 14400)
        throw std::invalid_argument("build_120cell: expected the order-14400 [5,3,3] group");
    FaceLattice L = build_polytope(std::move(g));
    if (L.fvector() != std::vector<int>{600, 1200, 720, 120})
        throw std::logic_error("build_120cell: unexpected f-vector");
    const std::vector<int> edge_deg = incidence_degrees(L, 1, 3);
    const std::vector<int> vert_deg = incidence_degrees(L, 0, 3);
    for (int e = 0; e < L.count(1); ++e)
        if (edge_deg[e] != 3) throw std::logic_error("build_120cell: edge " + FaceLattice::cell_id(1, e) + " in " + std::to_string(edge_deg[e]) + " 3-cells");
    for (int v = 0; v < L.count(0); ++v)
        if (vert_deg[v] != 4) throw std::logic_error("build_120cell: vertex " + FaceLattice::cell_id(0, v) + " in " + std::to_string(vert_deg[v]) + " 3-cells");
    std::string w;
    if (!diamond_property(L, &w)) throw std::logic_error("build_120cell: diamond property fails: " + w);
    return L;
}

}  // namespace hypcy
