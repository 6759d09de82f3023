#include "hypcy/seq/models.hpp"

#include <stdexcept>

namespace hypcy {

namespace {

SeqNode known(const std::string& name, const FgAbGroup& g) { return {name, g}; }
SeqNode unknown(const std::string& name) { return {name, std::nullopt}; }

SeqArrow plain() { return {}; }

SeqArrow tagged(SeqArrow::Tag t, const std::string& fact = "") {
    SeqArrow a;
    a.tag = t;
    a.fact = fact;
    return a;
}

GradedGroups extract(const SequenceProblem& p, const SolveResult& r, const std::string& prefix, int top) {
    GradedGroups h;
    for (int k = 0; k <= top; ++k) {
        auto g = r.group(p, prefix + std::to_string(k));
        if (!g) return {};
        h.push_back(*g);
    }
    return h;
}

// Free graded model: ranks per degree and maps per degree.
struct FreeModel {
    std::vector<int> ranks;
};

struct FreeMap {
    std::vector<IntMatrix> deg;  // deg[k]: ranks_target[k] x ranks_source[k]
};

FreeModel tensor(const FreeModel& A, const FreeModel& B) {
    FreeModel T;
    T.ranks.assign(A.ranks.size() + B.ranks.size() - 1, 0);
    for (std::size_t i = 0; i < A.ranks.size(); ++i)
        for (std::size_t j = 0; j < B.ranks.size(); ++j) T.ranks[i + j] += A.ranks[i] * B.ranks[j];
    return T;
}

// f x id_B as a map tensor(A, B) -> tensor(A', B); basis of degree k ordered by (i, a, b)
FreeMap tensor_with_identity(const FreeModel& A, const FreeModel& A2, const FreeMap& f, const FreeModel& B) {
    const FreeModel S = tensor(A, B), T = tensor(A2, B);
    FreeMap out;
    for (std::size_t k = 0; k < S.ranks.size(); ++k) {
        IntMatrix M(T.ranks[k], S.ranks[k]);
        int so = 0, to = 0;
        for (std::size_t i = 0; i <= k; ++i) {
            const std::size_t j = k - i;
            const int ra = i < A.ranks.size() ? A.ranks[i] : 0, ra2 = i < A2.ranks.size() ? A2.ranks[i] : 0;
            const int rb = j < B.ranks.size() ? B.ranks[j] : 0;
            for (int a = 0; a < ra; ++a)
                for (int a2 = 0; a2 < ra2; ++a2) {
                    const Integer v = f.deg[i].get(a2, a);
                    if (v == 0) continue;
                    for (int b = 0; b < rb; ++b) M.set(to + a2 * rb + b, so + a * rb + b, v);
                }
            so += ra * rb;
            to += ra2 * rb;
        }
        out.deg.push_back(M);
    }
    return out;
}

// Mayer-Vietoris problem ... -> H_k(A n B) -> H_k(A) + H_k(B) -> H_k(X) -> H_{k-1}(A n B) -> ...
SequenceProblem mayer_vietoris(const FreeModel& AB, const FreeModel& A, const FreeModel& B, const FreeMap& i1,
                               const FreeMap& i2, int top, const std::vector<SeqFact>& facts) {
    SequenceProblem p;
    auto rank_at = [](const FreeModel& m, int k) { return k < static_cast<int>(m.ranks.size()) ? m.ranks[k] : 0; };
    for (int k = top; k >= 0; --k) {
        const int n = rank_at(AB, k), na = rank_at(A, k), nb = rank_at(B, k);
        p.nodes.push_back(known("H" + std::to_string(k) + "(AnB)", FgAbGroup::free(n)));
        SeqArrow phi;
        IntMatrix M(na + nb, n);
        for (int c = 0; c < n; ++c) {
            if (k < static_cast<int>(i1.deg.size()))
                for (const auto& [r, v] : i1.deg[k].column(c)) M.set(r, c, v);
            if (k < static_cast<int>(i2.deg.size()))
                for (const auto& [r, v] : i2.deg[k].column(c)) M.set(na + r, c, -v);
        }
        phi.matrix = M;
        p.arrows.push_back(phi);
        p.nodes.push_back(known("H" + std::to_string(k) + "(A)+H" + std::to_string(k) + "(B)", FgAbGroup::free(na + nb)));
        p.arrows.push_back(plain());
        p.nodes.push_back(unknown("H" + std::to_string(k)));
        p.arrows.push_back(plain());
    }
    p.nodes.push_back(known("0", FgAbGroup{}));
    p.facts = facts;
    return p;
}

}  // namespace

nlohmann::json ModelHomology::to_json() const {
    nlohmann::json h = nlohmann::json::array();
    for (const auto& g : homology) h.push_back(g.to_json());
    return {{"problem", problem.to_json()}, {"result", result.to_json(problem)}, {"homology", h},
            {"checks_failed", checks_failed}, {"ok", ok()}};
}

SequenceProblem knot_threefold_problem(int m, bool with_fibre_axiom) {
    if (m != 2) throw std::invalid_argument("knot_threefold_problem: only m = 2 is modeled");
    // E = P^1 x C: (Z, Z^2, Z^2, Z^2, Z); relative groups H_j(X, E)
    const GradedGroups hE = {FgAbGroup::free(1), FgAbGroup::free(2), FgAbGroup::free(2), FgAbGroup::free(2),
                             FgAbGroup::free(1), FgAbGroup{}, FgAbGroup{}};
    const GradedGroups hXE = {FgAbGroup{}, FgAbGroup{}, FgAbGroup::free(2), FgAbGroup::free(3),
                              FgAbGroup{}, FgAbGroup{}, FgAbGroup::free(1)};
    SequenceProblem p;
    for (int k = 6; k >= 0; --k) {
        const std::string s = std::to_string(k);
        p.nodes.push_back(known("H" + s + "(E)", hE[k]));
        SeqArrow toX = plain();
        if (k == 2 && with_fibre_axiom) {
            toX.kernel_summand = 1;
            toX.fact = "fibre-null";
        }
        p.arrows.push_back(toX);
        p.nodes.push_back(unknown("H" + s));
        p.arrows.push_back(plain());
        p.nodes.push_back(known("H" + s + "(X,E)", hXE[k]));
        p.arrows.push_back(k == 2 ? tagged(SeqArrow::Tag::Isomorphism, "boundary-iso") : plain());
    }
    p.arrows.pop_back();
    p.facts = {
        {"relative-groups", "X/E is homeomorphic to (P/Z_2)/C; groups of the pair (P/Z_2, C)", {}},
        {"boundary-iso", "H_2(X,E) -> H_1(E) is an isomorphism (H_1(X) = 0, both Z^2)", {}},
        {"poincare-duality", "X is a closed oriented 6-manifold", {{"H2", "H4"}, {"H1", "H5"}, {"H0", "H6"}}},
        // name only; nothing here can check it
        {"branched-cover-mod2", "H^1(M, Z_2) = 0 for a 2^r-fold branched cover M of S^3 along a knot", {}},
    };
    if (with_fibre_axiom)
        p.facts.push_back({"fibre-null", "the elliptic fibre of E is null-homologous in X", {}});
    return p;
}

ModelHomology knot_threefold_homology(int m) {
    ModelHomology r;
    r.problem = knot_threefold_problem(m);
    r.result = solve(r.problem);
    r.homology = extract(r.problem, r.result, "H", 6);
    if (r.homology.size() == 7) {
        for (int k = 0; k <= 6; ++k)
            if (r.homology[k].rank != r.homology[6 - k].rank) r.checks_failed.push_back("poincare-duality b" + std::to_string(k));
        int chi = 0;
        for (int k = 0; k <= 6; ++k) chi += (k % 2 ? -1 : 1) * r.homology[k].rank;
        if (chi != 0) r.checks_failed.push_back("euler-characteristic");
    }
    return r;
}

ModelHomology orbifold_relative_homology() {
    // pair (Y, C), Y with the homology of S^3 x S^3, C an elliptic curve
    const GradedGroups hY = {FgAbGroup::free(1), FgAbGroup{}, FgAbGroup{}, FgAbGroup::free(2),
                             FgAbGroup{}, FgAbGroup{}, FgAbGroup::free(1)};
    const GradedGroups hC = {FgAbGroup::free(1), FgAbGroup::free(2), FgAbGroup::free(1), FgAbGroup{},
                             FgAbGroup{}, FgAbGroup{}, FgAbGroup{}};
    SequenceProblem p;
    for (int k = 6; k >= 0; --k) {
        const std::string s = std::to_string(k);
        p.nodes.push_back(known("H" + s + "(C)", hC[k]));
        // H_0(C) -> H_0(Y) is onto a connected space
        p.arrows.push_back(k == 0 ? tagged(SeqArrow::Tag::Isomorphism, "connected") : plain());
        p.nodes.push_back(known("H" + s + "(Y)", hY[k]));
        p.arrows.push_back(plain());
        p.nodes.push_back(unknown("H" + s + "(Y,C)"));
        p.arrows.push_back(plain());
    }
    p.nodes.push_back(known("0", FgAbGroup{}));
    p.facts = {{"connected", "C and Y are connected", {}}};
    ModelHomology r;
    r.problem = p;
    r.result = solve(p);
    GradedGroups h;
    for (int k = 0; k <= 6; ++k) {
        auto g = r.result.group(p, "H" + std::to_string(k) + "(Y,C)");
        if (!g) {
            h.clear();
            break;
        }
        h.push_back(*g);
    }
    r.homology = h;
    return r;
}

SequenceProblem orbifold_mv_problem() {
    // knot complement (Z, Z, 0, 0), meridian a1 generating H_1; U ~ S^1 with the longitude a2
    const FreeModel torus{{1, 2, 1}}, circle{{1, 1}}, s3{{1, 0, 0, 1}};
    FreeMap p1, p2;
    p1.deg = {IntMatrix::from_dense({{1}}), IntMatrix::from_dense({{1, 0}}), IntMatrix(0, 1)};
    p2.deg = {IntMatrix::from_dense({{1}}), IntMatrix::from_dense({{0, 1}}), IntMatrix(0, 1)};
    const FreeModel AB = tensor(torus, s3), A = tensor(circle, s3), B = tensor(circle, s3);
    const FreeMap i1 = tensor_with_identity(torus, circle, p1, s3);
    const FreeMap i2 = tensor_with_identity(torus, circle, p2, s3);
    return mayer_vietoris(AB, A, B, i1, i2, 6,
                          {{"knot-complement", "H_*(S^3 - K) = (Z, Z, 0, 0), H_1 generated by the meridian", {}},
                           {"product", "X_1 -> S^3 - K is a trivial S^3-fibration", {}},
                           {"X2-retracts", "X_2 retracts to the preimage of the knot", {}}});
}

ModelHomology orbifold_homology_mv() {
    ModelHomology r;
    r.problem = orbifold_mv_problem();
    r.result = solve(r.problem);
    r.homology = extract(r.problem, r.result, "H", 6);
    return r;
}

SequenceProblem two_balls_problem() {
    const FreeModel s2{{1, 0, 1}}, ball{{1}};
    FreeMap c;
    c.deg = {IntMatrix::from_dense({{1}}), IntMatrix(0, 0), IntMatrix(0, 1)};
    return mayer_vietoris(s2, ball, ball, c, c, 3, {{"balls", "two 3-balls meeting in a 2-sphere", {}}});
}

ModelHomology two_balls_homology() {
    ModelHomology r;
    r.problem = two_balls_problem();
    r.result = solve(r.problem);
    r.homology = extract(r.problem, r.result, "H", 3);
    return r;
}

GradedGroups leray_hirsch_module(const GradedGroups& base, int generator_degree) {
    if (generator_degree < 1) throw std::invalid_argument("leray_hirsch_module: generator degree >= 1");
    GradedGroups out(base.size() + generator_degree);
    for (std::size_t k = 0; k < out.size(); ++k) {
        FgAbGroup g;
        std::vector<long> tors;
        if (k < base.size()) {
            g.rank += base[k].rank;
            tors.insert(tors.end(), base[k].torsion.begin(), base[k].torsion.end());
        }
        if (k >= static_cast<std::size_t>(generator_degree) && k - generator_degree < base.size()) {
            const FgAbGroup& b = base[k - generator_degree];
            g.rank += b.rank;
            tors.insert(tors.end(), b.torsion.begin(), b.torsion.end());
        }
        out[k] = FgAbGroup::from_cyclic(g.rank, tors);
    }
    return out;
}

void WallData::validate() const {
    const std::size_t b = h2.rank;
    if (cubic_form.size() != b * b * b) throw std::invalid_argument("WallData: cubic form needs rank(H2)^3 entries");
    if (p1_pairing.size() != b) throw std::invalid_argument("WallData: p1 pairing needs rank(H2) entries");
    if (b3 < 0) throw std::invalid_argument("WallData: negative b3");
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j)
            for (std::size_t k = 0; k < b; ++k) {
                const long v = cubic_form[(i * b + j) * b + k];
                if (v != cubic_form[(j * b + i) * b + k] || v != cubic_form[(i * b + k) * b + j])
                    throw std::invalid_argument("WallData: cubic form is not symmetric");
            }
}

WallData WallData::model(int a, int b) {
    WallData d;
    d.b3 = 2 * a;
    d.h2 = FgAbGroup::free(b);
    d.cubic_form.assign(static_cast<std::size_t>(b) * b * b, 0);
    d.p1_pairing.assign(b, 0);
    d.spin = true;
    d.torsion_free = true;
    return d;
}

nlohmann::json WallData::to_json() const {
    return {{"b3", b3},         {"h2", h2.to_json()}, {"cubic_form", cubic_form},
            {"p1_pairing", p1_pairing}, {"spin", spin},       {"torsion_free", torsion_free}};
}

WallData WallData::from_json(const nlohmann::json& j) {
    WallData d;
    d.b3 = j.at("b3").get<int>();
    d.h2 = FgAbGroup::from_json(j.at("h2"));
    d.cubic_form = j.value("cubic_form", std::vector<long>{});
    d.p1_pairing = j.value("p1_pairing", std::vector<long>{});
    d.spin = j.value("spin", false);
    d.torsion_free = j.value("torsion_free", false);
    d.validate();
    return d;
}

std::string connected_sum_name(int a, int b) {
    auto part = [](int n, const std::string& s) { return n == 1 ? s : std::to_string(n) + s; };
    std::string out;
    if (a > 0) out += a == 1 ? "S³×S³" : part(a, "(S³×S³)");
    if (b > 0) out += (out.empty() ? "" : " # ") + (b == 1 ? std::string(a > 0 ? "(S²×S⁴)" : "S²×S⁴") : part(b, "(S²×S⁴)"));
    return out.empty() ? "S⁶" : out;
}

WallMatch wall_match(const WallData& d) {
    d.validate();
    WallMatch m;
    if (!d.spin || !d.torsion_free || !d.h2.is_free()) {
        m.name = "hypotheses not met";
        m.reason = !d.spin ? "not spin" : "cohomology has torsion";
        return m;
    }
    m.hypotheses_met = true;
    if (d.b3 % 2 != 0) {
        m.name = "no match";
        m.reason = "b3 is odd";
        return m;
    }
    const WallData model = WallData::model(d.b3 / 2, d.h2.rank);
    if (d.cubic_form != model.cubic_form) {
        m.name = "no match";
        m.reason = "cubic form is not zero";
        return m;
    }
    if (d.p1_pairing != model.p1_pairing) {
        m.name = "no match";
        m.reason = "p1 pairing is not zero";
        return m;
    }
    m.matched = true;
    m.a = d.b3 / 2;
    m.b = d.h2.rank;
    m.name = connected_sum_name(m.a, m.b);
    return m;
}

nlohmann::json WallMatch::to_json() const {
    nlohmann::json j = {{"hypotheses_met", hypotheses_met}, {"matched", matched}, {"name", name}};
    if (matched) {
        j["a"] = a;
        j["b"] = b;
    }
    if (!reason.empty()) j["reason"] = reason;
    return j;
}

}  // namespace hypcy
