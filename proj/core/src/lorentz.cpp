#include "hypcy/geom/lorentz.hpp"

#include <stdexcept>

namespace hypcy {

CoxeterDiagram CoxeterDiagram::linear(const std::vector<int>& schlafli) {
    CoxeterDiagram d;
    d.rank = static_cast<int>(schlafli.size()) + 1;
    for (int i = 0; i < static_cast<int>(schlafli.size()); ++i)
        if (schlafli[i] != 2) d.labels[{i, i + 1}] = schlafli[i];
    return d;
}

int CoxeterDiagram::label(int i, int j) const {
    if (i == j) return 1;
    if (i > j) std::swap(i, j);
    auto it = labels.find({i, j});
    return it == labels.end() ? 2 : it->second;
}

CoxeterDiagram CoxeterDiagram::restrict_to(const std::vector<int>& nodes) const {
    CoxeterDiagram d;
    d.rank = static_cast<int>(nodes.size());
    for (int a = 0; a < d.rank; ++a)
        for (int b = a + 1; b < d.rank; ++b) {
            int m = label(nodes[a], nodes[b]);
            if (m != 2) d.labels[{a, b}] = m;
        }
    return d;
}

std::string CoxeterDiagram::to_string() const {
    std::string s = "rank " + std::to_string(rank) + " {";
    bool first = true;
    for (const auto& [e, m] : labels) {
        if (!first) s += ", ";
        first = false;
        s += std::to_string(e.first) + "-" + std::to_string(e.second) + ":" + std::to_string(m);
    }
    return s + "}";
}

nlohmann::json GramMatrix::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < rank(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < rank(); ++j) row.push_back(entries(i, j).to_string());
        rows.push_back(row);
    }
    return {{"rank", rank()}, {"entries", rows}};
}

std::string Signature::to_string() const {
    return "(" + std::to_string(positive) + "," + std::to_string(negative) + "," + std::to_string(zero) + ")";
}

GramMatrix gram_of_diagram(const CoxeterDiagram& d) {
    for (const auto& [e, m] : d.labels) {
        if (e.first < 0 || e.second >= d.rank || e.first >= e.second)
            throw std::invalid_argument("gram_of_diagram: bad edge " + std::to_string(e.first) + "-" + std::to_string(e.second));
        if (m != 2 && m != 3 && m != 5)
            throw std::invalid_argument("gram_of_diagram: unsupported label " + std::to_string(m));
    }
    GramMatrix g{GoldenMatrix(d.rank, d.rank)};
    for (int i = 0; i < d.rank; ++i) {
        g.entries(i, i) = 1;
        for (int j = 0; j < d.rank; ++j) {
            if (i == j) continue;
            switch (d.label(i, j)) {
                case 3: g.entries(i, j) = GoldenScalar(Rational(-1, 2)); break;
                case 5: g.entries(i, j) = GoldenScalar(Rational(0), Rational(-1, 2)); break;
                default: break;
            }
        }
    }
    return g;
}

Signature signature(const GoldenMatrix& g0) {
    if (!g0.is_symmetric()) throw std::invalid_argument("signature: matrix is not symmetric");
    GoldenMatrix a = g0;
    const int n = a.rows();
    Signature sig;
    std::vector<bool> done(n, false);

    // Congruence a -> P^T a P with P = I + E_{ji}: adds row/col j to row/col i.
    auto add_into = [&](int i, int j) {
        for (int c = 0; c < n; ++c) a(i, c) += a(j, c);
        for (int r = 0; r < n; ++r) a(r, i) += a(r, j);
    };

    for (int step = 0; step < n; ++step) {
        int piv = -1;
        for (int i = 0; i < n && piv < 0; ++i)
            if (!done[i] && !a(i, i).is_zero()) piv = i;
        if (piv < 0) {
            // zero diagonal on the remainder; a nonzero off-diagonal entry
            // a_ij gives a nonzero diagonal after adding row/col j into i
            for (int i = 0; i < n && piv < 0; ++i)
                for (int j = 0; j < n && piv < 0; ++j)
                    if (i != j && !done[i] && !done[j] && !a(i, j).is_zero()) {
                        add_into(i, j);
                        piv = i;
                    }
        }
        if (piv < 0) break;
        const GoldenScalar d = a(piv, piv);
        const int s = golden_sign(d);
        (s > 0 ? sig.positive : sig.negative)++;
        done[piv] = true;
        // Schur complement on the remaining indices
        const GoldenScalar inv = d.inverse();
        for (int r = 0; r < n; ++r) {
            if (done[r] || a(r, piv).is_zero()) continue;
            GoldenScalar f = a(r, piv) * inv;
            for (int c = 0; c < n; ++c)
                if (!done[c] && !a(piv, c).is_zero()) a(r, c) -= f * a(piv, c);
        }
        for (int r = 0; r < n; ++r)
            if (r != piv) a(piv, r) = a(r, piv) = GoldenScalar();
    }
    for (int i = 0; i < n; ++i)
        if (!done[i]) sig.zero++;
    return sig;
}

NormalBasisVector NormalBasisVector::basis(std::shared_ptr<const GramMatrix> g, int i) {
    NormalBasisVector v{std::vector<GoldenScalar>(g->rank()), g};
    v.coords.at(i) = 1;
    return v;
}

GoldenScalar inner(const GramMatrix& g, const std::vector<GoldenScalar>& u, const std::vector<GoldenScalar>& v) {
    const int n = g.rank();
    if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
        throw std::invalid_argument("inner: dimension mismatch");
    GoldenScalar s;
    for (int i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        GoldenScalar row;
        for (int j = 0; j < n; ++j)
            if (!v[j].is_zero() && !g(i, j).is_zero()) row += g(i, j) * v[j];
        s += u[i] * row;
    }
    return s;
}

GoldenScalar inner(const NormalBasisVector& u, const NormalBasisVector& v) {
    if (!u.gram || u.gram != v.gram) throw std::invalid_argument("inner: vectors use different Gram matrices");
    return inner(*u.gram, u.coords, v.coords);
}

NormalBasisVector reflect(int i, const NormalBasisVector& v) {
    if (!v.gram) throw std::invalid_argument("reflect: vector has no Gram matrix");
    if (i < 0 || i >= v.gram->rank() || v.dim() != v.gram->rank())
        throw std::invalid_argument("reflect: dimension mismatch");
    GoldenScalar ip;
    for (int j = 0; j < v.dim(); ++j) ip += (*v.gram)(i, j) * v.coords[j];
    NormalBasisVector r = v;
    r.coords[i] -= GoldenScalar(2) * ip;
    return r;
}

GoldenMatrix reflection_matrix(const GramMatrix& g, int i) {
    const int n = g.rank();
    GoldenMatrix s = GoldenMatrix::identity(n);
    for (int c = 0; c < n; ++c) s(i, c) -= GoldenScalar(2) * g(i, c);
    return s;
}

GoldenMatrix reflection_in(const GramMatrix& g, const std::vector<GoldenScalar>& d) {
    const int n = g.rank();
    const GoldenScalar dd = inner(g, d, d);
    if (dd.is_zero()) throw std::invalid_argument("reflection_in: null vector");
    // R = I - 2 d (G d)^T / <d,d>
    std::vector<GoldenScalar> gd(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gd[i] += g(i, j) * d[j];
    const GoldenScalar k = GoldenScalar(2) / dd;
    GoldenMatrix r = GoldenMatrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) -= k * d[i] * gd[j];
    return r;
}

GoldenScalar dihedral_cosine(const NormalBasisVector& u, const NormalBasisVector& v) {
    if (inner(u, u) != GoldenScalar(1) || inner(v, v) != GoldenScalar(1))
        throw std::invalid_argument("dihedral_cosine: inputs must be unit spacelike vectors");
    return -inner(u, v);
}

bool is_isometry(const GoldenMatrix& m, const GramMatrix& g) {
    return m.rows() == g.rank() && m.cols() == g.rank() && m.transpose() * g.entries * m == g.entries;
}

}  // namespace hypcy
