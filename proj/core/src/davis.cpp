#include "hypcy/davis/davis.hpp"

#include <stdexcept>

#include "hypcy/homology/homology.hpp"
#include "hypcy/homology/snf.hpp"

namespace hypcy {

QuotientSpec davis_spec(const FaceLattice& L, const FacePairing& P, std::shared_ptr<const RegularComplex> X) {
    QuotientSpec spec{std::move(X), {}};
    for (int f = 0; f < L.count(L.dim() - 1); ++f)
        spec.gluings.push_back({L.dim() - 1, f, P.partner[f], lattice_action(L, P.map[f])});
    return spec;
}

DavisModel build_davis_model(std::size_t max_order) {
    DavisModel m;
    m.group = std::make_shared<const ReflectionGroup>(generate_group(CoxeterDiagram::linear({5, 3, 3}), max_order));
    m.lattice = std::make_shared<const FaceLattice>(build_120cell(m.group));
    m.realization = realize_hyperbolic(*m.lattice);
    m.pairing = antipodal_pairing(*m.lattice, m.realization);
    m.polytope = std::make_shared<const RegularComplex>(regular_complex(*m.lattice));
    m.quotient = std::make_shared<const QuotientComplex>(quotient_complex(davis_spec(*m.lattice, m.pairing, m.polytope)));
    m.sigma_element = m.group->longest();
    if (!m.group->matrix(m.sigma_element).scaled(GoldenScalar(-1)).is_identity())
        throw std::logic_error("build_davis_model: longest element is not central");
    m.sigma = lattice_action(*m.lattice, m.sigma_element);
    return m;
}

int b3_of_resolution(const GradedAction& h, const std::vector<int>& center_betti) {
    if (h.dims.size() < 4 || h.action.size() != h.dims.size())
        throw std::invalid_argument("b3_of_resolution: inconsistent degree data");
    for (std::size_t k = 0; k < h.dims.size(); ++k)
        if (h.action[k].rows() != h.dims[k] || h.action[k].cols() != h.dims[k])
            throw std::invalid_argument("b3_of_resolution: inconsistent degree data in degree " + std::to_string(k));
    auto invariant = [&](int k) {
        if (h.dims[k] == 0) return 0;
        return static_cast<int>((h.action[k] - QMatrix::identity(h.dims[k])).nullspace().size());
    };
    // H^3 of the bundle model: H^3(M) + H^1(M) u
    int b3 = invariant(3) + invariant(1);
    // correction: H^*(C) e, generator e in degree 2; degree 3 needs H^1(C)
    if (center_betti.size() > 1) b3 += center_betti[1];
    return b3;
}

KahlerVerdict kahler_obstruction(int b1, int b3) {
    return (b1 == 0 && b3 < 2) ? KahlerVerdict::Obstructed : KahlerVerdict::Inconclusive;
}

std::string to_string(KahlerVerdict v) {
    return v == KahlerVerdict::Obstructed ? "no Kahler structure with c1=0" : "test inconclusive";
}

namespace {

nlohmann::json groups_json(const std::vector<FgAbGroup>& h) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& g : h) a.push_back(g.to_json());
    return a;
}

int trace(const QMatrix& m) {
    Rational t = 0;
    for (int i = 0; i < m.rows(); ++i) t += m(i, i);
    if (t.get_den() != 1) throw std::logic_error("trace: non-integral trace of an integral map");
    return static_cast<int>(t.get_num().get_si());
}

}  // namespace

DavisReport run_davis_pipeline(const DavisModel& m) {
    DavisReport r;
    const QuotientComplex& Q = *m.quotient;
    const CwComplex& M = Q.cw();
    r.adjacent_facet_pairs = m.realization.adjacent_pairs;
    r.separated_facet_pairs = m.realization.separated_pairs;
    r.pairs = static_cast<int>(m.pairing.pairs.size());
    r.orbit_counts = Q.orbit_counts();
    r.chi = euler_characteristic(M);
    r.homology = homology(M);
    r.homology_mod2 = homology_mod2(M);

    FlagComplex sd = subdivided_quotient(Q);
    r.subdivision_counts = sd.cw.counts;
    r.subdivision_homology = homology(sd.cw);

    r.fixed_points = fixed_strata(Q, m.sigma);
    const CellMap s = induced_map(Q, m.sigma);
    r.sigma_order = s.order(8).value_or(0);

    std::vector<QMatrix> on_h;
    for (int k = 0; k <= M.dim(); ++k) {
        on_h.push_back(induced_on_homology(s, k));
        r.sigma_traces.push_back(trace(on_h.back()));
    }
    const QMatrix& h1 = on_h[1];
    r.sigma_minus_identity_on_h1 = (h1 + QMatrix::identity(h1.rows())).is_zero();
    r.sigma_h1_trace = r.sigma_traces[1];
    for (int k = 0; k <= M.dim(); ++k) {
        int tc = 0;
        for (int o = 0; o < M.count(k); ++o) tc += static_cast<int>(s.maps[k].get(o, o).get_si());
        r.lefschetz_cellular += (k % 2 ? -1 : 1) * tc;
        r.lefschetz_homological += (k % 2 ? -1 : 1) * r.sigma_traces[k];
    }

    FlagComplex sq = subdivided_quotient(Q, &m.sigma);
    r.quotient_homology = homology(sq.cw);
    r.quotient_h1 = r.quotient_homology.at(1);

    // H_1 = C^3 / im d_3^T in the dual cell structure, whose 1-cells are the deck loops
    {
        std::vector<long> tors;
        int rank = M.count(3);
        for (const Integer& d : invariant_factors(M.boundary[3].transpose())) {
            --rank;
            if (d > 1) tors.push_back(d.get_si());
        }
        r.loop_quotient = FgAbGroup::from_cyclic(rank, tors);
    }

    // cohomology action is the transpose of the homology action
    GradedAction ga;
    for (int k = 0; k <= M.dim(); ++k) {
        ga.dims.push_back(on_h[k].rows());
        ga.action.push_back(on_h[k].transpose());
    }
    r.b3_hat = b3_of_resolution(ga);
    r.verdict = kahler_obstruction(r.quotient_h1.rank, r.b3_hat);
    return r;
}

nlohmann::json DavisReport::to_json() const {
    nlohmann::json fp = fixed_points.to_json();
    return {{"orbit_counts", orbit_counts},
            {"chi", chi},
            {"homology", groups_json(homology)},
            {"homology_mod2", homology_mod2},
            {"subdivision_counts", subdivision_counts},
            {"subdivision_homology", groups_json(subdivision_homology)},
            {"fixed_points", fp},
            {"sigma_order", sigma_order},
            {"sigma_on_h1", {{"minus_identity", sigma_minus_identity_on_h1}, {"trace", sigma_h1_trace}}},
            {"sigma_traces", sigma_traces},
            {"lefschetz", {{"cellular", lefschetz_cellular}, {"homological", lefschetz_homological}}},
            {"quotient_h1", quotient_h1.to_json()},
            {"quotient_homology", groups_json(quotient_homology)},
            {"loop_quotient", loop_quotient.to_json()},
            {"b3_hat", b3_hat},
            {"kahler", hypcy::to_string(verdict)},
            {"facet_pairs", pairs},
            {"adjacent_facet_pairs", adjacent_facet_pairs},
            {"separated_facet_pairs", separated_facet_pairs}};
}

}  // namespace hypcy
