#include "hypcy/complex/regular.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "hypcy/coxeter/polytope.hpp"

namespace hypcy {

RegularComplex::RegularComplex(std::vector<std::vector<std::vector<int>>> faces) : faces_(std::move(faces)) {
    if (faces_.empty()) throw std::invalid_argument("RegularComplex: empty");
    cofaces_.resize(faces_.size());
    for (int k = 0; k <= dim(); ++k) cofaces_[k].resize(faces_[k].size());
    for (int k = 1; k <= dim(); ++k)
        for (int c = 0; c < count(k); ++c) {
            auto& f = faces_[k][c];
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
            for (int x : f) {
                if (x < 0 || x >= count(k - 1)) throw std::invalid_argument("RegularComplex: face index out of range");
                cofaces_[k - 1][x].push_back(c);
            }
        }
    for (int c = 0; c < count(0); ++c)
        if (!faces_[0][c].empty()) throw std::invalid_argument("RegularComplex: vertices have no faces");
    orient();
}

void RegularComplex::orient() {
    signs_.resize(faces_.size());
    signs_[0].resize(count(0));
    for (int k = 1; k <= dim(); ++k) {
        signs_[k].resize(count(k));
        for (int c = 0; c < count(k); ++c) {
            const auto& fs = faces_[k][c];
            auto& sg = signs_[k][c];
            sg.assign(fs.size(), 0);
            if (k == 1) {
                if (fs.size() != 2) throw std::invalid_argument("RegularComplex: edge " + CwComplex::cell_id(1, c) + " needs two distinct endpoints");
                sg = {-1, 1};
                continue;
            }
            // (k-2)-face -> positions of the facets of c containing it
            std::map<int, std::vector<int>> ridge;
            for (int i = 0; i < static_cast<int>(fs.size()); ++i)
                for (int g : faces_[k - 1][fs[i]]) ridge[g].push_back(i);
            for (const auto& [g, who] : ridge)
                if (who.size() != 2)
                    throw std::invalid_argument("RegularComplex: " + CwComplex::cell_id(k, c) + " is not a regular cell at " +
                                                CwComplex::cell_id(k - 2, g));
            std::vector<std::vector<std::pair<int, int>>> adj(fs.size());  // (other facet, ridge)
            for (const auto& [g, who] : ridge) {
                adj[who[0]].push_back({who[1], g});
                adj[who[1]].push_back({who[0], g});
            }
            sg[0] = 1;
            std::deque<int> q{0};
            while (!q.empty()) {
                int i = q.front();
                q.pop_front();
                for (auto [j, g] : adj[i]) {
                    int want = -sg[i] * incidence(k - 1, fs[i], g) * incidence(k - 1, fs[j], g);
                    if (sg[j] == 0) {
                        sg[j] = want;
                        q.push_back(j);
                    } else if (sg[j] != want) {
                        throw std::invalid_argument("RegularComplex: " + CwComplex::cell_id(k, c) + " is not orientable");
                    }
                }
            }
            if (std::find(sg.begin(), sg.end(), 0) != sg.end())
                throw std::invalid_argument("RegularComplex: boundary of " + CwComplex::cell_id(k, c) + " is disconnected");
        }
    }
}

int RegularComplex::incidence(int k, int c, int f) const {
    const auto& fs = faces_[k][c];
    auto it = std::lower_bound(fs.begin(), fs.end(), f);
    if (it == fs.end() || *it != f) return 0;
    return signs_[k][c][it - fs.begin()];
}

std::vector<std::vector<int>> RegularComplex::closure(int k, int c) const {
    std::vector<std::vector<int>> out(k + 1);
    out[k] = {c};
    for (int d = k; d > 0; --d) {
        std::set<int> next;
        for (int x : out[d])
            for (int f : faces_[d][x]) next.insert(f);
        out[d - 1].assign(next.begin(), next.end());
    }
    return out;
}

bool RegularComplex::in_closure(int kx, int x, int k, int c) const {
    if (kx > k) return false;
    if (kx == k) return x == c;
    auto cl = closure(k, c);
    return std::binary_search(cl[kx].begin(), cl[kx].end(), x);
}

CwComplex RegularComplex::cw() const {
    std::vector<int> counts;
    for (int k = 0; k <= dim(); ++k) counts.push_back(count(k));
    CwComplex X = CwComplex::with_counts(counts);
    for (int k = 1; k <= dim(); ++k)
        for (int c = 0; c < count(k); ++c)
            for (std::size_t i = 0; i < faces_[k][c].size(); ++i) X.boundary[k].set(faces_[k][c][i], c, signs_[k][c][i]);
    return X;
}

CellPerm CellPerm::identity(const RegularComplex& X) {
    CellPerm p;
    for (int k = 0; k <= X.dim(); ++k) {
        p.image.emplace_back(X.count(k));
        for (int c = 0; c < X.count(k); ++c) p.image[k][c] = c;
    }
    return p;
}

CellPerm CellPerm::compose(const CellPerm& other) const {
    CellPerm p = other;
    for (std::size_t k = 0; k < p.image.size(); ++k)
        for (auto& x : p.image[k])
            if (x >= 0) x = image[k][x];
    return p;
}

CellPerm CellPerm::inverse() const {
    CellPerm p;
    for (const auto& row : image) {
        std::vector<int> inv(row.size(), -1);
        for (int c = 0; c < static_cast<int>(row.size()); ++c)
            if (row[c] >= 0) {
                if (inv[row[c]] >= 0) throw std::invalid_argument("CellPerm::inverse: not injective");
                inv[row[c]] = c;
            }
        p.image.push_back(std::move(inv));
    }
    return p;
}

bool CellPerm::defined_on_closure(const RegularComplex& X, int k, int c) const {
    auto cl = X.closure(k, c);
    for (int d = 0; d <= k; ++d)
        for (int x : cl[d])
            if (image[d][x] < 0) return false;
    return true;
}

int cell_sign(const RegularComplex& X, const CellPerm& phi, int k, int c) {
    int s = 1;
    while (k > 0) {
        const int f = X.faces(k, c).front();
        const int pc = phi(k, c), pf = phi(k - 1, f);
        if (pc < 0 || pf < 0) throw std::invalid_argument("cell_sign: map undefined on closure of " + CwComplex::cell_id(k, c));
        const int target = X.incidence(k, pc, pf);
        if (target == 0) throw std::invalid_argument("cell_sign: map breaks incidence at " + CwComplex::cell_id(k, c));
        s *= X.incidence(k, c, f) * target;
        c = f;
        --k;
    }
    return s;
}

bool check_cell_morphism(const RegularComplex& X, const CellPerm& phi, std::string* witness) {
    auto fail = [&](const std::string& w) {
        if (witness) *witness = w;
        return false;
    };
    for (int k = 1; k <= X.dim(); ++k)
        for (int c = 0; c < X.count(k); ++c) {
            const int pc = phi(k, c);
            if (pc < 0) continue;
            int s = 0;
            std::vector<int> imgs;
            for (int f : X.faces(k, c)) {
                const int pf = phi(k - 1, f);
                if (pf < 0) return fail("undefined on a face of " + CwComplex::cell_id(k, c));
                const int t = X.incidence(k, pc, pf);
                if (t == 0) return fail("incidence broken at " + CwComplex::cell_id(k, c));
                int local = X.incidence(k, c, f) * t * cell_sign(X, phi, k - 1, f);
                if (s == 0) s = local;
                else if (s != local) return fail("inconsistent orientation sign on " + CwComplex::cell_id(k, c));
                imgs.push_back(pf);
            }
            std::sort(imgs.begin(), imgs.end());
            if (imgs != X.faces(k, pc)) return fail("faces of " + CwComplex::cell_id(k, c) + " not mapped onto faces of image");
        }
    return true;
}

RegularComplex regular_complex(const FaceLattice& L) {
    std::vector<std::vector<std::vector<int>>> faces(L.dim() + 1);
    for (int k = 0; k <= L.dim(); ++k) {
        faces[k].resize(L.count(k));
        if (k > 0)
            for (int c = 0; c < L.count(k); ++c) faces[k][c] = L.faces(k, c);
    }
    return RegularComplex(std::move(faces));
}

CellPerm lattice_action(const FaceLattice& L, unsigned g) {
    CellPerm p;
    for (int k = 0; k <= L.dim(); ++k) {
        p.image.emplace_back(L.count(k));
        for (int c = 0; c < L.count(k); ++c) p.image[k][c] = L.act(g, k, c);
    }
    return p;
}

}  // namespace hypcy
