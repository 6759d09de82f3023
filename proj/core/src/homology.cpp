#include "hypcy/homology/homology.hpp"

#include <stdexcept>

#include "hypcy/homology/snf.hpp"

namespace hypcy {

namespace {

void require_dd(const CwComplex& c) {
    std::string w;
    if (!c.boundary_squares_to_zero(&w)) throw std::invalid_argument("homology: boundary condition violated: " + w);
}

}  // namespace

std::vector<FgAbGroup> homology(const CwComplex& c) {
    require_dd(c);
    const int d = c.dim();
    std::vector<std::vector<Integer>> factors(d + 2);
    for (int k = 1; k <= d; ++k) factors[k] = invariant_factors(c.boundary[k]);
    std::vector<FgAbGroup> h;
    for (int k = 0; k <= d; ++k) {
        const int rk = static_cast<int>(factors[k].size());
        const int rk1 = static_cast<int>(factors[k + 1].size());
        std::vector<long> tors;
        for (const Integer& f : factors[k + 1])
            if (f > 1) {
                if (!f.fits_slong_p()) throw std::overflow_error("homology: torsion coefficient too large");
                tors.push_back(f.get_si());
            }
        h.push_back(FgAbGroup::from_cyclic(c.count(k) - rk - rk1, tors));
    }
    return h;
}

std::vector<int> homology_mod2(const CwComplex& c) {
    require_dd(c);
    const int d = c.dim();
    std::vector<int> r(d + 2, 0);
    for (int k = 1; k <= d; ++k) r[k] = rank_mod2(c.boundary[k]);
    std::vector<int> h;
    for (int k = 0; k <= d; ++k) h.push_back(c.count(k) - r[k] - r[k + 1]);
    return h;
}

std::vector<int> betti_numbers(const std::vector<FgAbGroup>& h) {
    std::vector<int> b;
    for (const auto& g : h) b.push_back(g.rank);
    return b;
}

int euler_characteristic(const CwComplex& c) {
    int chi = 0;
    for (int k = 0; k <= c.dim(); ++k) chi += (k % 2 ? -1 : 1) * c.count(k);
    return chi;
}

HomologyBasis homology_basis(const CwComplex& c, int k) {
    const int n = c.count(k);
    HomologyBasis hb;
    // boundaries: independent columns of d_{k+1}
    std::vector<std::vector<Rational>> bcols;
    if (k + 1 <= c.dim()) {
        QMatrix b = c.boundary[k + 1].to_rational();
        QMatrix t = b;
        for (int p : t.rref()) bcols.push_back(b.column(p));
    }
    std::vector<std::vector<Rational>> zcols;
    if (k >= 1) {
        zcols = c.boundary[k].to_rational().nullspace();
    } else {
        for (int i = 0; i < n; ++i) {
            std::vector<Rational> e(n, Rational(0));
            e[i] = 1;
            zcols.push_back(e);
        }
    }
    // extend the boundary basis by cycles, keeping those that raise the rank
    auto sparse = [](const std::vector<Rational>& v) {
        SparseRow r;
        for (int i = 0; i < static_cast<int>(v.size()); ++i)
            if (v[i] != 0) r[i] = v[i];
        return r;
    };
    SparseEliminator span(n);
    for (const auto& b : bcols) span.add(sparse(b));
    std::vector<std::vector<Rational>> hcols;
    for (const auto& z : zcols)
        if (span.add(sparse(z))) hcols.push_back(z);
    hb.boundaries = QMatrix::from_columns(n, bcols);
    hb.cycles = QMatrix::from_columns(n, hcols);
    return hb;
}

QMatrix induced_on_homology(const CellMap& f, int k) {
    std::string w;
    if (!f.is_chain_map(&w)) throw std::invalid_argument("induced_on_homology: " + w);
    const HomologyBasis src = homology_basis(*f.source, k);
    const HomologyBasis tgt = homology_basis(*f.target, k);
    const int n = f.target->count(k);
    std::vector<std::vector<Rational>> cols;
    for (int j = 0; j < tgt.boundaries.cols(); ++j) cols.push_back(tgt.boundaries.column(j));
    for (int j = 0; j < tgt.cycles.cols(); ++j) cols.push_back(tgt.cycles.column(j));
    const int nb = tgt.boundaries.cols(), nc = tgt.cycles.cols(), ns = src.cycles.cols();
    const int nbasis = static_cast<int>(cols.size());
    const QMatrix fk = f.maps[k].to_rational();
    for (int j = 0; j < ns; ++j) cols.push_back(fk.apply(src.cycles.column(j)));
    QMatrix aug = QMatrix::from_columns(n, cols);
    const std::vector<int> piv = aug.rref();
    for (int i = 0; i < nbasis; ++i)
        if (i >= static_cast<int>(piv.size()) || piv[i] != i)
            throw std::logic_error("induced_on_homology: image is not a cycle");
    if (static_cast<int>(piv.size()) > nbasis) throw std::logic_error("induced_on_homology: image is not a cycle");
    QMatrix out(nc, ns);
    for (int j = 0; j < ns; ++j)
        for (int i = 0; i < nc; ++i) out(i, j) = aug(nb + i, nbasis + j);
    return out;
}

nlohmann::json homology_json(const std::vector<FgAbGroup>& h, int chi) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& g : h) arr.push_back(g.to_json());
    return {{"H", arr}, {"chi", chi}};
}

}  // namespace hypcy
