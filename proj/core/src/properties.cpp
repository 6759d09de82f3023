#include "hypcy/report/properties.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>

#include "hypcy/complex/examples.hpp"
#include "hypcy/complex/quotient.hpp"
#include "hypcy/complex/subdivision.hpp"
#include "hypcy/homology/homology.hpp"
#include "hypcy/homology/snf.hpp"

namespace hypcy {

int RandomSource::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational RandomSource::rational(int max_num, int max_den) {
    Rational q(uniform(-max_num, max_num), uniform(1, max_den));
    q.canonicalize();
    return q;
}

GoldenScalar RandomSource::golden() { return {rational(), rational()}; }

CycloScalar RandomSource::cyclo(int m) {
    std::vector<Rational> c(static_cast<std::size_t>(euler_phi(2 * m)));
    for (auto& x : c) x = rational(9, 4);
    return CycloScalar(m, std::move(c));
}

IntMatrix RandomSource::int_matrix(int rows, int cols, int max_entry, int percent_zero) {
    IntMatrix a(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (uniform(1, 100) > percent_zero) a.set(i, j, uniform(-max_entry, max_entry));
    return a;
}

std::vector<std::vector<int>> RandomSource::simplices(int max_vertices, int max_dim) {
    const int v = uniform(3, max_vertices);
    const int nfacets = uniform(1, 5);
    std::vector<std::vector<int>> out;
    for (int f = 0; f < nfacets; ++f) {
        std::vector<int> verts = permutation(v);
        verts.resize(static_cast<std::size_t>(uniform(1, std::min(max_dim + 1, v))));
        out.push_back(verts);
    }
    std::set<int> used;
    for (const auto& s : out) used.insert(s.begin(), s.end());
    std::map<int, int> relabel;
    for (int x : used) relabel.emplace(x, static_cast<int>(relabel.size()));
    for (auto& s : out)
        for (int& x : s) x = relabel.at(x);
    return out;
}

std::vector<int> RandomSource::permutation(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

namespace {

nlohmann::json dense_json(const IntMatrix& a) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : a.to_dense()) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& x : row) r.push_back(x.get_str());
        rows.push_back(r);
    }
    return rows;
}

struct Tally {
    PropertyResult r;
    explicit Tally(std::string name) { r.name = std::move(name); }
    void record(bool ok, const std::function<nlohmann::json()>& witness) {
        ++r.cases;
        if (ok) return;
        if (r.failures++ == 0) r.first_failure = witness();
    }
};

template <class F>
bool field_laws(const F& a, const F& b, const F& c, std::string& law) {
    if ((a + b) + c != a + (b + c)) law = "additive associativity";
    else if (a + b != b + a) law = "additive commutativity";
    else if ((a * b) * c != a * (b * c)) law = "multiplicative associativity";
    else if (a * b != b * a) law = "multiplicative commutativity";
    else if (a * (b + c) != a * b + a * c) law = "distributivity";
    else if (a + (-a) != b - b) law = "additive inverse";
    return law.empty();
}

std::vector<std::vector<int>> vertex_sets(const RegularComplex& X, int k, std::vector<std::vector<std::vector<int>>>& memo) {
    if (static_cast<int>(memo.size()) > k) return memo[k];
    if (k == 0) {
        std::vector<std::vector<int>> v(static_cast<std::size_t>(X.count(0)));
        for (int c = 0; c < X.count(0); ++c) v[c] = {c};
        memo.push_back(v);
        return v;
    }
    auto lower = vertex_sets(X, k - 1, memo);
    std::vector<std::vector<int>> v(static_cast<std::size_t>(X.count(k)));
    for (int c = 0; c < X.count(k); ++c) {
        std::set<int> s;
        for (int f : X.faces(k, c)) s.insert(lower[f].begin(), lower[f].end());
        v[c].assign(s.begin(), s.end());
    }
    memo.push_back(v);
    return v;
}

int permutation_sign(std::vector<int> p) {
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        while (p[i] != static_cast<int>(i)) {
            std::swap(p[i], p[static_cast<std::size_t>(p[i])]);
            sign = -sign;
        }
    return sign;
}

}  // namespace

CellPerm vertex_permutation_map(const RegularComplex& X, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != X.count(0))
        throw std::invalid_argument("vertex_permutation_map: permutation size differs from vertex count");
    std::vector<std::vector<std::vector<int>>> memo;
    CellPerm phi;
    for (int k = 0; k <= X.dim(); ++k) {
        auto vs = vertex_sets(X, k, memo);
        std::map<std::vector<int>, int> index;
        for (int c = 0; c < X.count(k); ++c) index.emplace(vs[c], c);
        std::vector<int> img(vs.size());
        for (int c = 0; c < X.count(k); ++c) {
            std::vector<int> s;
            for (int x : vs[c]) s.push_back(perm[x]);
            std::sort(s.begin(), s.end());
            auto it = index.find(s);
            if (it == index.end())
                throw std::invalid_argument("vertex_permutation_map: complex not invariant at " +
                                            CwComplex::cell_id(k, c));
            img[c] = it->second;
        }
        phi.image.push_back(std::move(img));
    }
    return phi;
}

PropertyResult field_axioms_rational(RandomSource& r, int cases) {
    Tally t("field axioms over Q");
    for (int i = 0; i < cases; ++i) {
        Rational a = r.rational(), b = r.rational(), c = r.rational();
        std::string law;
        if (field_laws(a, b, c, law) && sgn(a) != 0 && a * (1 / a) != 1) law = "multiplicative inverse";
        t.record(law.empty(), [&] {
            return nlohmann::json{{"law", law}, {"a", a.get_str()}, {"b", b.get_str()}, {"c", c.get_str()}};
        });
    }
    return t.r;
}

PropertyResult field_axioms_golden(RandomSource& r, int cases) {
    Tally t("field axioms over Q(phi)");
    for (int i = 0; i < cases; ++i) {
        GoldenScalar a = r.golden(), b = r.golden(), c = r.golden();
        std::string law;
        if (!field_laws(a, b, c, law)) {
        } else if (!a.is_zero() && a * a.inverse() != GoldenScalar(1)) {
            law = "multiplicative inverse";
        } else if ((a * b).norm() != a.norm() * b.norm()) {
            law = "norm multiplicative";
        } else if ((a * b).conj() != a.conj() * b.conj() || (a + b).conj() != a.conj() + b.conj()) {
            law = "conjugation is a field automorphism";
        }
        t.record(law.empty(), [&] {
            return nlohmann::json{{"law", law}, {"a", a.to_string()}, {"b", b.to_string()}, {"c", c.to_string()}};
        });
    }
    return t.r;
}

PropertyResult field_axioms_cyclotomic(RandomSource& r, int cases) {
    Tally t("ring axioms over Q(zeta_2m)");
    const int ms[] = {2, 3, 4, 5, 8};
    for (int i = 0; i < cases; ++i) {
        const int m = ms[r.uniform(0, 4)];
        CycloScalar a = r.cyclo(m), b = r.cyclo(m), c = r.cyclo(m);
        std::string law;
        const CycloScalar one(m, Rational(1));
        if (!field_laws(a, b, c, law)) {
        } else if (a * one != a) {
            law = "multiplicative identity";
        } else if ((a * b).conj() != a.conj() * b.conj()) {
            law = "conjugation multiplicative";
        } else if (!CycloScalar::zeta_power(m, r.uniform(1, 4 * m) * 2L * m).is_one()) {
            law = "zeta^(2m) = 1";
        }
        t.record(law.empty(), [&] {
            return nlohmann::json{
                {"law", law}, {"m", m}, {"a", a.to_string()}, {"b", b.to_string()}, {"c", c.to_string()}};
        });
    }
    return t.r;
}

PropertyResult snf_reverification(RandomSource& r, int cases) {
    Tally t("Smith normal form UAV = D");
    for (int i = 0; i < cases; ++i) {
        const int rows = r.uniform(1, 6), cols = r.uniform(1, 6);
        IntMatrix a = r.int_matrix(rows, cols);
        if (i % 3 == 0) {
            // force rank deficiency and larger invariant factors
            const int inner = r.uniform(1, std::min(rows, cols));
            a = r.int_matrix(rows, inner, 4, 20) * r.int_matrix(inner, cols, 4, 20);
        }
        std::string why;
        try {
            SnfResult s = smith_normal_form(a);
            const int n = std::min(rows, cols);
            bool diagonal = true;
            for (int c = 0; c < cols; ++c)
                for (const auto& [row, v] : s.D.column(c))
                    if (row != c && sgn(v) != 0) diagonal = false;
            std::vector<Integer> diag;
            bool chain = true;
            for (int k = 0; k < n; ++k) {
                Integer d = s.D.get(k, k);
                if (sgn(d) < 0) chain = false;
                if (sgn(d) == 0) continue;
                if (!diag.empty() && (diag.size() != static_cast<std::size_t>(k) || d % diag.back() != 0))
                    chain = false;
                diag.push_back(d);
            }
            auto unimodular = [](const IntMatrix& m) { return abs(m.to_rational().determinant()) == 1; };
            int odd = 0;
            for (const auto& d : diag) odd += mpz_odd_p(d.get_mpz_t()) != 0;
            if (s.U * a * s.V != s.D) why = "U A V != D";
            else if (!diagonal) why = "D not diagonal";
            else if (!chain) why = "diagonal is not a divisibility chain";
            else if (!unimodular(s.U) || !unimodular(s.V)) why = "transform not unimodular";
            else if (invariant_factors(a) != diag) why = "invariant_factors disagrees with D";
            else if (rank_mod2(a) != odd) why = "rank_mod2 disagrees with D";
        } catch (const std::exception& e) {
            why = e.what();
        }
        t.record(why.empty(), [&] { return nlohmann::json{{"failure", why}, {"matrix", dense_json(a)}}; });
    }
    return t.r;
}

PropertyResult boundary_squared_zero(RandomSource& r, int cases) {
    Tally t("boundary squares to zero");
    for (int i = 0; i < cases; ++i) {
        auto simplices = r.simplices();
        std::string where;
        bool ok = false;
        try {
            RegularComplex X = simplicial_complex(simplices);
            ok = X.cw().boundary_squares_to_zero(&where);
            if (ok && i % 4 == 0) {
                ok = barycentric_subdivision(X).cw.boundary_squares_to_zero(&where);
                if (!ok) where = "subdivision: " + where;
            }
        } catch (const std::exception& e) {
            where = e.what();
        }
        t.record(ok, [&] { return nlohmann::json{{"simplices", simplices}, {"where", where}}; });
    }
    return t.r;
}

PropertyResult subdivision_homology(RandomSource& r, int cases) {
    Tally t("homology invariant under subdivision");
    for (int i = 0; i < cases; ++i) {
        auto simplices = r.simplices(6, 3);
        nlohmann::json got, want;
        bool ok = false;
        try {
            RegularComplex X = simplicial_complex(simplices);
            auto h = homology(X.cw());
            auto hs = homology(barycentric_subdivision(X).cw);
            ok = h == hs;
            for (const auto& g : h) want.push_back(g.to_string());
            for (const auto& g : hs) got.push_back(g.to_string());
        } catch (const std::exception& e) {
            got = e.what();
        }
        t.record(ok, [&] { return nlohmann::json{{"simplices", simplices}, {"complex", want}, {"subdivision", got}}; });
    }
    return t.r;
}

PropertyResult chain_map_functoriality(RandomSource& r, int cases) {
    Tally t("chain map functoriality");
    struct Sphere {
        int n;
        std::shared_ptr<const QuotientComplex> q;
    };
    std::vector<Sphere> spheres;
    for (int n = 2; n <= 4; ++n) {
        std::vector<std::vector<int>> facets;
        for (int skip = 0; skip <= n; ++skip) {
            std::vector<int> f;
            for (int v = 0; v <= n; ++v)
                if (v != skip) f.push_back(v);
            facets.push_back(f);
        }
        auto X = std::make_shared<RegularComplex>(simplicial_complex(facets));
        spheres.push_back({n, std::make_shared<QuotientComplex>(quotient_complex({X, {}}))});
    }
    std::vector<std::shared_ptr<const QuotientComplex>> tori;
    for (int n = 3; n <= 4; ++n)
        tori.push_back(std::make_shared<QuotientComplex>(
            quotient_complex({std::make_shared<RegularComplex>(torus_grid(n)), {}})));

    for (int i = 0; i < cases; ++i) {
        std::string why;
        nlohmann::json input;
        try {
            if (i % 4 != 3) {
                const Sphere& s = spheres[static_cast<std::size_t>(r.uniform(0, 2))];
                auto p = r.permutation(s.n + 1), q = r.permutation(s.n + 1);
                input = {{"sphere_dim", s.n - 1}, {"f", p}, {"g", q}};
                CellPerm fp = vertex_permutation_map(s.q->base(), p), gp = vertex_permutation_map(s.q->base(), q);
                CellMap f = induced_map(*s.q, fp), g = induced_map(*s.q, gp);
                CellMap fg = induced_map(*s.q, fp.compose(gp));
                std::vector<int> pq(p.size());
                for (std::size_t v = 0; v < p.size(); ++v) pq[v] = p[static_cast<std::size_t>(q[v])];
                const int top = s.n - 1;
                QMatrix hf = induced_on_homology(f, top), hg = induced_on_homology(g, top);
                QMatrix hfg = induced_on_homology(fg, top);
                if (!f.is_chain_map() || !g.is_chain_map()) why = "not a chain map";
                else if (f.compose(g) != fg) why = "(fg)# != f# g#";
                else if (hfg != hf * hg) why = "(fg)_* != f_* g_*";
                else if (hfg.rows() != 1 || hfg(0, 0) != permutation_sign(pq)) why = "degree is not the sign";
            } else {
                const int which = r.uniform(0, 1), n = which + 3;
                const auto& q = *tori[static_cast<std::size_t>(which)];
                int a = r.uniform(0, n - 1), b = r.uniform(0, n - 1), c = r.uniform(0, n - 1), d = r.uniform(0, n - 1);
                input = {{"torus_grid", n}, {"f", {a, b}}, {"g", {c, d}}};
                CellMap f = induced_map(q, torus_translation(n, a, b)), g = induced_map(q, torus_translation(n, c, d));
                CellMap fg = induced_map(q, torus_translation(n, a + c, b + d));
                if (f.compose(g) != fg) why = "translation composition on chains";
                else if (!induced_on_homology(fg, 1).is_identity() ||
                         induced_on_homology(f, 1) * induced_on_homology(g, 1) != induced_on_homology(fg, 1))
                    why = "translation action on H_1";
            }
        } catch (const std::exception& e) {
            why = e.what();
        }
        t.record(why.empty(), [&] { return nlohmann::json{{"failure", why}, {"input", input}}; });
    }
    return t.r;
}

std::vector<PropertyResult> run_property_suites(std::uint64_t seed) {
    // one stream per suite so suites can be rerun in isolation
    auto rs = [&](std::uint64_t k) { return RandomSource(seed * 1000003ULL + k); };
    std::vector<PropertyResult> out;
    {
        auto r = rs(1);
        out.push_back(field_axioms_rational(r, 2500));
    }
    {
        auto r = rs(2);
        out.push_back(field_axioms_golden(r, 2500));
    }
    {
        auto r = rs(3);
        out.push_back(field_axioms_cyclotomic(r, 1500));
    }
    {
        auto r = rs(4);
        out.push_back(snf_reverification(r, 1500));
    }
    {
        auto r = rs(5);
        out.push_back(boundary_squared_zero(r, 1500));
    }
    {
        auto r = rs(6);
        out.push_back(subdivision_homology(r, 600));
    }
    {
        auto r = rs(7);
        out.push_back(chain_map_functoriality(r, 1000));
    }
    return out;
}

}  // namespace hypcy
