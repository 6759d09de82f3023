#include "hypcy/coxeter/hyperbolic.hpp"

#include <stdexcept>

namespace hypcy {

namespace {

std::vector<GoldenScalar> unit_dual(const GoldenMatrix& ginv, int k) {
    std::vector<GoldenScalar> v(ginv.rows());
    for (int i = 0; i < ginv.rows(); ++i) v[i] = ginv(i, k);
    return v;
}

std::vector<GoldenScalar> sub(const std::vector<GoldenScalar>& a, const std::vector<GoldenScalar>& b) {
    std::vector<GoldenScalar> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

}  // namespace

HyperbolicRealization realize_hyperbolic(const FaceLattice& lattice) {
    const ReflectionGroup& h4 = lattice.group();
    if (lattice.dim() != 4 || lattice.fvector() != std::vector<int>{600, 1200, 720, 120})
        throw std::invalid_argument("realize_hyperbolic: lattice is not the 120-cell");

    HyperbolicRealization R;
    R.gram = std::make_shared<const GramMatrix>(gram_of_diagram(CoxeterDiagram::linear({5, 3, 3, 5})));
    R.ambient_signature = signature(*R.gram);
    if (!(R.ambient_signature == Signature{4, 1, 0}))
        throw std::logic_error("realize_hyperbolic: [5,3,3,5] form has signature " + R.ambient_signature.to_string());

    auto g5 = std::make_shared<ReflectionGroup>(generate_parabolic(*R.gram, {0, 1, 2, 3}, h4.order() + 1));
    if (g5->order() != h4.order()) throw std::logic_error("realize_hyperbolic: parabolic order mismatch");
    for (ReflectionGroup::Elem x = 0; x < h4.order(); ++x)
        if (g5->word(x) != h4.word(x)) throw std::logic_error("realize_hyperbolic: element numbering differs");
    R.group = g5;

    const GoldenMatrix ginv = R.gram->entries.inverse();
    R.center = unit_dual(ginv, 4);
    if (golden_sign(inner(*R.gram, R.center, R.center)) >= 0)
        throw std::logic_error("realize_hyperbolic: center is not timelike");
    const std::vector<GoldenScalar> v3 = unit_dual(ginv, 3);

    const NormalBasisVector e4 = NormalBasisVector::basis(R.gram, 4);
    for (int c = 0; c < lattice.count(3); ++c) {
        const auto x = lattice.rep(3, c);
        R.normals.push_back({g5->apply(x, e4.coords), R.gram});
        R.facet_centers.push_back(g5->apply(x, v3));
    }

    const GoldenScalar expected = GoldenScalar(Rational(-1, 2), Rational(1, 2));
    const GoldenScalar minus_one(-1);
    std::vector<std::vector<bool>> adjacent(120, std::vector<bool>(120, false));
    for (int f = 0; f < lattice.count(2); ++f) {
        const auto& co = lattice.cofaces(2, f);
        if (co.size() != 2) throw std::logic_error("realize_hyperbolic: 2-cell not in two facets");
        GoldenScalar c = dihedral_cosine(R.normals[co[0]], R.normals[co[1]]);
        if (c != expected)
            throw std::logic_error("realize_hyperbolic: dihedral cosine " + c.to_string() + " at " + FaceLattice::cell_id(2, f));
        adjacent[co[0]][co[1]] = adjacent[co[1]][co[0]] = true;
        R.adjacent_pairs++;
    }
    for (int i = 0; i < 120; ++i)
        for (int j = i + 1; j < 120; ++j) {
            if (adjacent[i][j]) continue;
            if (inner(R.normals[i], R.normals[j]) <= minus_one) R.separated_pairs++;
        }
    return R;
}

nlohmann::json FacePairing::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : pairs)
        arr.push_back({{"facet", FaceLattice::cell_id(3, p.facet)},
                       {"partner", FaceLattice::cell_id(3, p.partner)},
                       {"element", p.element}});
    return arr;
}

FacePairing antipodal_pairing(const FaceLattice& lattice, const HyperbolicRealization& real) {
    const ReflectionGroup& g5 = *real.group;
    const auto w0 = lattice.group().longest();
    const int nf = lattice.count(3);
    FacePairing P;
    P.partner.assign(nf, -1);
    P.map.assign(nf, 0);
    for (int f = 0; f < nf; ++f) {
        const int a = lattice.act(w0, 3, f);
        if (a == f) throw std::logic_error("antipodal_pairing: facet " + FaceLattice::cell_id(3, f) + " has no antipode");
        P.partner[f] = a;
        const auto d = sub(real.facet_centers[f], real.facet_centers[a]);
        GoldenMatrix r = reflection_in(*real.gram, d);
        if (!is_isometry(r, *real.gram) || !(r * r).is_identity())
            throw std::logic_error("antipodal_pairing: reflection for " + FaceLattice::cell_id(3, f) + " is not an isometric involution");
        auto e = g5.find(r);
        if (!e) throw std::logic_error("antipodal_pairing: reflection for " + FaceLattice::cell_id(3, f) + " is not a symmetry");
        if (lattice.act(*e, 3, f) != a || r.apply(real.normals[f].coords) != real.normals[a].coords)
            throw std::logic_error("antipodal_pairing: reflection does not carry " + FaceLattice::cell_id(3, f) + " to its antipode");
        P.map[f] = *e;
        if (f < a) P.pairs.push_back({f, a, *e, LorentzMatrix{r}});
    }
    for (int f = 0; f < nf; ++f)
        if (P.partner[P.partner[f]] != f) throw std::logic_error("antipodal_pairing: pairing is not an involution");
    return P;
}

}  // namespace hypcy
