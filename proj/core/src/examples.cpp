#include "hypcy/complex/examples.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hypcy/coxeter/polytope.hpp"

namespace hypcy {

RegularComplex simplicial_complex(const std::vector<std::vector<int>>& simplices) {
    std::vector<std::map<std::vector<int>, int>> index;
    auto add = [&](std::vector<int> s, auto&& self) -> void {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty()) return;
        const std::size_t k = s.size() - 1;
        if (index.size() <= k) index.resize(k + 1);
        if (!index[k].emplace(s, 0).second) return;
        if (k == 0) return;
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::vector<int> f = s;
            f.erase(f.begin() + static_cast<long>(i));
            self(f, self);
        }
    };
    for (const auto& s : simplices) add(s, add);
    if (index.empty()) throw std::invalid_argument("simplicial_complex: no simplices");
    std::vector<std::vector<std::vector<int>>> faces(index.size());
    for (std::size_t k = 0; k < index.size(); ++k) {
        int i = 0;
        for (auto& [s, id] : index[k]) id = i++;
        faces[k].resize(index[k].size());
        if (k == 0) continue;
        for (const auto& [s, id] : index[k])
            for (std::size_t j = 0; j < s.size(); ++j) {
                std::vector<int> f = s;
                f.erase(f.begin() + static_cast<long>(j));
                faces[k][id].push_back(index[k - 1].at(f));
            }
    }
    return RegularComplex(std::move(faces));
}

CwComplex circle_cw() { return CwComplex::with_counts({1, 1}); }

QuotientSpec torus_square() {
    // vertices 0=(0,0) 1=(1,0) 2=(1,1) 3=(0,1); edges bottom, right, top, left
    auto X = std::make_shared<RegularComplex>(std::vector<std::vector<std::vector<int>>>{
        {{}, {}, {}, {}}, {{0, 1}, {1, 2}, {3, 2}, {0, 3}}, {{0, 1, 2, 3}}});
    auto perm = [](std::vector<int> v, std::vector<int> e) {
        CellPerm p;
        p.image = {std::move(v), std::move(e), {-1}};
        return p;
    };
    QuotientSpec q{X, {}};
    q.gluings.push_back({1, 0, 2, perm({3, 2, -1, -1}, {2, -1, -1, -1})});
    q.gluings.push_back({1, 2, 0, perm({-1, -1, 1, 0}, {-1, -1, 0, -1})});
    q.gluings.push_back({1, 3, 1, perm({1, -1, -1, 2}, {-1, -1, -1, 1})});
    q.gluings.push_back({1, 1, 3, perm({-1, 0, 3, -1}, {-1, 3, -1, -1})});
    return q;
}

namespace {

int grid_vertex(int n, int x, int y) { return ((y % n + n) % n) * n + (x % n + n) % n; }
// horizontal edges first, then vertical
int grid_hedge(int n, int x, int y) { return grid_vertex(n, x, y); }
int grid_vedge(int n, int x, int y) { return n * n + grid_vertex(n, x, y); }

}  // namespace

RegularComplex torus_grid(int n) {
    if (n < 3) throw std::invalid_argument("torus_grid: need n >= 3");
    std::vector<std::vector<std::vector<int>>> f(3);
    f[0].assign(n * n, {});
    f[1].resize(2 * n * n);
    f[2].resize(n * n);
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            f[1][grid_hedge(n, x, y)] = {grid_vertex(n, x, y), grid_vertex(n, x + 1, y)};
            f[1][grid_vedge(n, x, y)] = {grid_vertex(n, x, y), grid_vertex(n, x, y + 1)};
            f[2][grid_vertex(n, x, y)] = {grid_hedge(n, x, y), grid_hedge(n, x, y + 1), grid_vedge(n, x, y),
                                          grid_vedge(n, x + 1, y)};
        }
    return RegularComplex(std::move(f));
}

CellPerm torus_translation(int n, int dx, int dy) {
    CellPerm p;
    p.image.assign(3, {});
    p.image[0].resize(n * n);
    p.image[1].resize(2 * n * n);
    p.image[2].resize(n * n);
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            p.image[0][grid_vertex(n, x, y)] = grid_vertex(n, x + dx, y + dy);
            p.image[1][grid_hedge(n, x, y)] = grid_hedge(n, x + dx, y + dy);
            p.image[1][grid_vedge(n, x, y)] = grid_vedge(n, x + dx, y + dy);
            p.image[2][grid_vertex(n, x, y)] = grid_vertex(n, x + dx, y + dy);
        }
    return p;
}

CwComplex double_polytope(const RegularComplex& P) {
    const int d = P.dim();
    if (d < 1 || P.count(d) != 1) throw std::invalid_argument("double_polytope: expected a single top cell");
    const CwComplex c = P.cw();
    CwComplex out = c;
    out.counts[d] = 2;
    IntMatrix top(c.count(d - 1), 2);
    for (const auto& [r, v] : c.boundary[d].column(0)) {
        top.set(r, 0, v);
        top.set(r, 1, -v);
    }
    out.boundary[d] = top;
    out.labels.clear();
    auto& sing = out.labels["singular"];
    for (int k = 0; k <= d - 2; ++k)
        for (int i = 0; i < c.count(k); ++i) sing.push_back(CwComplex::cell_id(k, i));
    return out;
}

CwComplex double_polytope(const FaceLattice& L) { return double_polytope(regular_complex(L)); }

}  // namespace hypcy
