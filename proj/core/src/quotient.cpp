#include "hypcy/complex/quotient.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace hypcy {

int QuotientComplex::transport(const std::vector<int>& path, int k, int x) const {
    for (int g : path) {
        x = spec_.gluings[g].map(k, x);
        if (x < 0) throw std::logic_error("transport: gluing undefined along path");
    }
    return x;
}

int QuotientComplex::transport_back(const std::vector<int>& path, int k, int x) const {
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        x = spec_.gluings[inverse_[*it]].map(k, x);
        if (x < 0) throw std::logic_error("transport_back: gluing undefined along path");
    }
    return x;
}

std::vector<int> QuotientComplex::orbit_counts() const {
    std::vector<int> c;
    for (const auto& r : reps_) c.push_back(static_cast<int>(r.size()));
    return c;
}

namespace {

int path_sign(const QuotientComplex& q, const std::vector<int>& path, int k, int x) {
    int s = 1;
    for (int g : path) {
        s *= cell_sign(q.base(), q.spec().gluings[g].map, k, x);
        x = q.spec().gluings[g].map(k, x);
    }
    return s;
}

}  // namespace

QuotientComplex quotient_complex(const QuotientSpec& spec) {
    const RegularComplex& X = *spec.complex;
    QuotientComplex Q;
    Q.spec_ = spec;
    const int D = X.dim();
    const int ng = static_cast<int>(spec.gluings.size());

    // pair up inverse gluings and validate them
    Q.inverse_.assign(ng, -1);
    for (int g = 0; g < ng; ++g) {
        const Gluing& a = spec.gluings[g];
        if (a.map(a.dim, a.cell) != a.partner) throw std::invalid_argument("quotient_complex: gluing does not carry its cell to its partner");
        if (!a.map.defined_on_closure(X, a.dim, a.cell))
            throw std::invalid_argument("quotient_complex: gluing undefined on closure of " + CwComplex::cell_id(a.dim, a.cell));
        for (int h = 0; h < ng && Q.inverse_[g] < 0; ++h) {
            const Gluing& b = spec.gluings[h];
            if (b.dim != a.dim || b.cell != a.partner || b.partner != a.cell) continue;
            auto cl = X.closure(a.dim, a.cell);
            bool inv = true;
            for (int d = 0; d <= a.dim && inv; ++d)
                for (int x : cl[d])
                    if (b.map(d, a.map(d, x)) != x) {
                        inv = false;
                        break;
                    }
            if (inv) Q.inverse_[g] = h;
        }
        if (Q.inverse_[g] < 0)
            throw std::invalid_argument("quotient_complex: gluing of " + CwComplex::cell_id(a.dim, a.cell) + " has no inverse");
    }

    Q.gluings_at_.resize(D + 1);
    for (int k = 0; k <= D; ++k) Q.gluings_at_[k].resize(X.count(k));
    for (int g = 0; g < ng; ++g) {
        const Gluing& a = spec.gluings[g];
        auto cl = X.closure(a.dim, a.cell);
        for (int d = 0; d <= a.dim; ++d)
            for (int x : cl[d]) Q.gluings_at_[d][x].push_back(g);
    }

    Q.orbit_.resize(D + 1);
    Q.reps_.resize(D + 1);
    Q.sign_.resize(D + 1);
    Q.path_.resize(D + 1);
    for (int k = 0; k <= D; ++k) {
        const int n = X.count(k);
        Q.orbit_[k].assign(n, -1);
        Q.sign_[k].assign(n, 0);
        Q.path_[k].assign(n, {});
        for (int start = 0; start < n; ++start) {
            if (Q.orbit_[k][start] >= 0) continue;
            const int o = static_cast<int>(Q.reps_[k].size());
            Q.reps_[k].push_back(start);
            Q.orbit_[k][start] = o;
            Q.sign_[k][start] = 1;
            const auto rho_closure = X.closure(k, start);
            std::deque<int> queue{start};
            while (!queue.empty()) {
                const int x = queue.front();
                queue.pop_front();
                for (int g : Q.gluings_at_[k][x]) {
                    const int y = spec.gluings[g].map(k, x);
                    std::vector<int> py = Q.path_[k][x];
                    py.push_back(g);
                    const int sy = path_sign(Q, py, k, start);
                    if (Q.orbit_[k][y] < 0) {
                        Q.orbit_[k][y] = o;
                        Q.path_[k][y] = std::move(py);
                        Q.sign_[k][y] = sy;
                        queue.push_back(y);
                        continue;
                    }
                    // loop in the orbit graph: the two transports must agree
                    if (sy != Q.sign_[k][y])
                        throw std::runtime_error("quotient_complex: orientation transport inconsistency in orbit of " +
                                                 CwComplex::cell_id(k, start) + " at " + CwComplex::cell_id(k, y));
                    for (int d = 0; d <= k; ++d)
                        for (int z : rho_closure[d])
                            if (Q.transport(py, d, z) != Q.transport(Q.path_[k][y], d, z))
                                throw std::runtime_error("quotient_complex: nontrivial self-gluing of " + CwComplex::cell_id(k, y) +
                                                         " in orbit of " + CwComplex::cell_id(k, start));
                }
            }
        }
    }

    std::vector<int> counts;
    for (int k = 0; k <= D; ++k) counts.push_back(Q.orbit_count(k));
    auto cw = std::make_shared<CwComplex>(CwComplex::with_counts(counts));
    for (int k = 1; k <= D; ++k)
        for (int o = 0; o < Q.orbit_count(k); ++o) {
            const int rho = Q.reps_[k][o];
            for (int f : X.faces(k, rho)) cw->boundary[k].add(Q.orbit_[k - 1][f], o, X.incidence(k, rho, f) * Q.sign_[k - 1][f]);
        }
    std::string w;
    if (!cw->boundary_squares_to_zero(&w)) throw std::runtime_error("quotient_complex: " + w);
    Q.cw_ = std::move(cw);
    return Q;
}

CellMap induced_map(const QuotientComplex& q, const CellPerm& phi) {
    const RegularComplex& X = q.base();
    CellMap f{q.cw_ptr(), q.cw_ptr(), {}};
    for (int k = 0; k <= X.dim(); ++k) {
        const int n = q.orbit_count(k);
        IntMatrix m(n, n);
        std::vector<int> coeff(n, 0), image(n, -1);
        for (int x = 0; x < X.count(k); ++x) {
            const int px = phi(k, x);
            if (px < 0) throw std::invalid_argument("induced_map: map undefined at " + CwComplex::cell_id(k, x));
            const int o = q.orbit(k, x);
            const int c = q.sign(k, x) * cell_sign(X, phi, k, x) * q.sign(k, px);
            const int po = q.orbit(k, px);
            if (image[o] < 0) {
                image[o] = po;
                coeff[o] = c;
            } else if (image[o] != po || coeff[o] != c) {
                throw std::runtime_error("induced_map: map does not descend at " + CwComplex::cell_id(k, x));
            }
        }
        for (int o = 0; o < n; ++o) m.set(image[o], o, coeff[o]);
        f.maps.push_back(std::move(m));
    }
    std::string w;
    if (!f.is_chain_map(&w)) throw std::runtime_error("induced_map: " + w);
    return f;
}

int FixedStrataReport::isolated_total() const {
    int t = 0;
    for (int x : isolated) t += x;
    return t;
}

bool FixedStrataReport::finite_fixed_set() const {
    for (const auto& s : strata)
        if (!s.isolated_point) return false;
    return true;
}

nlohmann::json FixedStrataReport::to_json() const {
    return {{"order", order},
            {"setwise", setwise},
            {"isolated", isolated},
            {"pointwise", pointwise},
            {"free_pairs", free_pairs},
            {"total", isolated_total()}};
}

FixedStrataReport fixed_strata(const QuotientComplex& q, const CellPerm& phi, int max_order) {
    const RegularComplex& X = q.base();
    const CellMap f = induced_map(q, phi);
    auto ord = f.order(max_order);
    if (!ord) throw std::invalid_argument("fixed_strata: map has no finite order up to " + std::to_string(max_order));
    FixedStrataReport rep;
    rep.order = *ord;
    const int D = X.dim();
    rep.setwise.assign(D + 1, 0);
    rep.isolated.assign(D + 1, 0);
    rep.pointwise.assign(D + 1, 0);
    rep.free_pairs.assign(D + 1, 0);
    for (int k = 0; k <= D; ++k) {
        int moved = 0;
        for (int o = 0; o < q.orbit_count(k); ++o) {
            const int rho = q.rep(k, o);
            const int img = phi(k, rho);
            if (q.orbit(k, img) != o) {
                ++moved;
                continue;
            }
            // h = (transport to phi(rho))^{-1} o phi, a symmetry of closure(rho)
            const auto& back = q.path(k, img);
            const auto cl = X.closure(k, rho);
            bool all_fixed = true, some_face_fixed = false;
            for (int d = 0; d <= k; ++d) {
                std::set<int> seen;
                for (int z : cl[d]) {
                    const int h = q.transport_back(back, d, phi(d, z));
                    if (!std::binary_search(cl[d].begin(), cl[d].end(), h) || !seen.insert(h).second)
                        throw std::logic_error("fixed_strata: induced cell map is not a bijection on " + CwComplex::cell_id(k, rho));
                    if (h == z) {
                        if (d < k) some_face_fixed = true;
                    } else {
                        all_fixed = false;
                    }
                }
            }
            if (all_fixed && k > 0 && cell_sign(X, phi, k, rho) * q.sign(k, img) != 1) all_fixed = false;
            FixedStratum s{k, o, all_fixed, !some_face_fixed};
            rep.strata.push_back(s);
            rep.setwise[k]++;
            if (s.isolated_point) rep.isolated[k]++;
            if (s.pointwise) rep.pointwise[k]++;
        }
        if (rep.order == 2) rep.free_pairs[k] = moved / 2;
    }
    return rep;
}

}  // namespace hypcy
