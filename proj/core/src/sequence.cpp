#include "hypcy/seq/sequence.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hypcy/homology/snf.hpp"

namespace hypcy {

namespace {

const char* tag_name(SeqArrow::Tag t) {
    switch (t) {
        case SeqArrow::Tag::None: return "none";
        case SeqArrow::Tag::Zero: return "zero";
        case SeqArrow::Tag::Injective: return "injective";
        case SeqArrow::Tag::Surjective: return "surjective";
        case SeqArrow::Tag::Isomorphism: return "isomorphism";
    }
    return "none";
}

SeqArrow::Tag tag_of(const std::string& s) {
    if (s == "none" || s.empty()) return SeqArrow::Tag::None;
    if (s == "zero") return SeqArrow::Tag::Zero;
    if (s == "injective") return SeqArrow::Tag::Injective;
    if (s == "surjective") return SeqArrow::Tag::Surjective;
    if (s == "isomorphism") return SeqArrow::Tag::Isomorphism;
    throw std::invalid_argument("unknown arrow tag '" + s + "'");
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<long> t = a.torsion;
    t.insert(t.end(), b.torsion.begin(), b.torsion.end());
    return FgAbGroup::from_cyclic(a.rank + b.rank, t);
}

FgAbGroup cokernel(const IntMatrix& M) {
    int rank = M.rows();
    std::vector<long> tors;
    for (const Integer& d : invariant_factors(M)) {
        --rank;
        if (d > 1) {
            if (!d.fits_slong_p()) throw std::overflow_error("cokernel: torsion too large");
            tors.push_back(d.get_si());
        }
    }
    return FgAbGroup::from_cyclic(rank, tors);
}

int matrix_rank(const IntMatrix& M) { return static_cast<int>(invariant_factors(M).size()); }

struct Contradiction : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Solver {
public:
    explicit Solver(const SequenceProblem& p) : p_(p), L_(static_cast<int>(p.nodes.size())) {
        node_.resize(L_);
        arrow_.resize(L_ - 1);
    }

    SolveResult run();

private:
    struct NodeState {
        std::optional<int> rank;
        std::optional<FgAbGroup> group;
        bool torsion_free = false;
    };
    struct ArrowState {
        bool zero = false, inj = false, surj = false;
        std::optional<int> rank;
        std::optional<FgAbGroup> image;
        bool image_tf = false;
    };

    const std::string& name(int i) const { return p_.nodes[i].name; }
    std::string arrow_name(int i) const { return name(i) + "->" + name(i + 1); }
    bool interior(int i) const { return i > 0 && i < L_ - 1; }

    void note(const std::string& rule, std::vector<int> nodes, const std::string& what) {
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        Deduction d{rule, {}, what};
        for (int i : nodes) d.inputs.push_back(name(i));
        log_.push_back(std::move(d));
        changed_ = true;
    }

    void set_group(int i, const FgAbGroup& g, const std::string& rule, std::vector<int> in) {
        NodeState& s = node_[i];
        if (s.group) {
            if (*s.group != g)
                throw Contradiction(name(i) + " is " + s.group->to_string() + " but " + rule + " gives " + g.to_string());
            return;
        }
        if (s.rank && *s.rank != g.rank)
            throw Contradiction(name(i) + " has rank " + std::to_string(*s.rank) + " but " + rule + " gives " + g.to_string());
        s.group = g;
        s.rank = g.rank;
        if (g.is_free()) s.torsion_free = true;
        note(rule, in, name(i) + " = " + g.to_string());
    }

    void set_rank(int i, int r, const std::string& rule, std::vector<int> in) {
        NodeState& s = node_[i];
        if (r < 0) throw Contradiction(rule + " gives negative rank for " + name(i));
        if (s.rank) {
            if (*s.rank != r)
                throw Contradiction(name(i) + " has rank " + std::to_string(*s.rank) + " but " + rule + " gives " + std::to_string(r));
            return;
        }
        s.rank = r;
        note(rule, in, "rank " + name(i) + " = " + std::to_string(r));
    }

    void set_tf(int i, const std::string& rule, std::vector<int> in) {
        NodeState& s = node_[i];
        if (s.torsion_free) return;
        if (s.group && !s.group->is_free()) throw Contradiction(name(i) + " has torsion but " + rule + " says torsion-free");
        s.torsion_free = true;
        note(rule, in, name(i) + " torsion-free");
    }

    void set_zero(int a, const std::string& rule, std::vector<int> in) {
        ArrowState& s = arrow_[a];
        if (s.zero) return;
        if (s.rank && *s.rank != 0) throw Contradiction(arrow_name(a) + " has rank " + std::to_string(*s.rank) + " but " + rule + " makes it zero");
        s.zero = true;
        note(rule, in, arrow_name(a) + " zero");
    }

    void set_inj(int a, const std::string& rule, std::vector<int> in) {
        if (arrow_[a].inj) return;
        arrow_[a].inj = true;
        note(rule, in, arrow_name(a) + " injective");
    }

    void set_surj(int a, const std::string& rule, std::vector<int> in) {
        if (arrow_[a].surj) return;
        arrow_[a].surj = true;
        note(rule, in, arrow_name(a) + " surjective");
    }

    void set_arrow_rank(int a, int r, const std::string& rule, std::vector<int> in) {
        ArrowState& s = arrow_[a];
        if (r < 0) throw Contradiction(rule + " gives negative rank for " + arrow_name(a));
        if (s.rank) {
            if (*s.rank != r)
                throw Contradiction(arrow_name(a) + " has rank " + std::to_string(*s.rank) + " but " + rule + " gives " + std::to_string(r));
            return;
        }
        s.rank = r;
        note(rule, in, "rank im(" + arrow_name(a) + ") = " + std::to_string(r));
    }

    void set_image(int a, const FgAbGroup& g, const std::string& rule, std::vector<int> in) {
        ArrowState& s = arrow_[a];
        if (s.image) {
            if (*s.image != g)
                throw Contradiction("im(" + arrow_name(a) + ") is " + s.image->to_string() + " but " + rule + " gives " + g.to_string());
            return;
        }
        s.image = g;
        note(rule, in, "im(" + arrow_name(a) + ") = " + g.to_string());
    }

    void set_image_tf(int a, const std::string& rule, std::vector<int> in) {
        if (arrow_[a].image_tf) return;
        arrow_[a].image_tf = true;
        note(rule, in, "im(" + arrow_name(a) + ") torsion-free");
    }

    void init();
    void node_rules();
    void arrow_rules();
    void interior_rules();
    void rank_system(bool final_check);
    void check_consistency();

    const SequenceProblem& p_;
    int L_;
    std::vector<NodeState> node_;
    std::vector<ArrowState> arrow_;
    std::vector<Deduction> log_;
    std::vector<std::string> residual_;
    bool changed_ = false;
};

void Solver::init() {
    for (int i = 0; i < L_; ++i)
        if (p_.nodes[i].known) {
            node_[i].group = p_.nodes[i].known;
            node_[i].rank = p_.nodes[i].known->rank;
            node_[i].torsion_free = p_.nodes[i].known->is_free();
        }
    for (int a = 0; a < L_ - 1; ++a) {
        const SeqArrow& ar = p_.arrows[a];
        ArrowState& s = arrow_[a];
        using T = SeqArrow::Tag;
        s.zero = ar.tag == T::Zero;
        s.inj = ar.tag == T::Injective || ar.tag == T::Isomorphism;
        s.surj = ar.tag == T::Surjective || ar.tag == T::Isomorphism;
        if (ar.rank) s.rank = ar.rank;
        if (ar.matrix) {
            const IntMatrix& M = *ar.matrix;
            set_group(a, FgAbGroup::free(M.cols()), "matrix-domain", {a});
            set_group(a + 1, FgAbGroup::free(M.rows()), "matrix-codomain", {a + 1});
            const int r = matrix_rank(M);
            set_arrow_rank(a, r, "matrix-rank", {a, a + 1});
            set_image(a, FgAbGroup::free(r), "image-of-matrix", {a, a + 1});
        }
    }
}

void Solver::node_rules() {
    for (int i = 0; i < L_; ++i) {
        NodeState& s = node_[i];
        if (s.group && s.group->is_trivial()) {
            if (i > 0) set_zero(i - 1, "zero-node", {i});
            if (i < L_ - 1) set_zero(i, "zero-node", {i});
        }
        if (!s.group && s.rank && s.torsion_free) set_group(i, FgAbGroup::free(*s.rank), "torsion-free-rank", {i});
    }
}

void Solver::arrow_rules() {
    for (int a = 0; a < L_ - 1; ++a) {
        ArrowState& s = arrow_[a];
        const int src = a, dst = a + 1;
        if (s.rank && *s.rank == 0 && s.image_tf) set_zero(a, "rank-zero", {src, dst});
        if (s.image && s.image->is_trivial()) set_zero(a, "trivial-image", {src, dst});
        if (s.zero) {
            set_image(a, FgAbGroup{}, "zero-map", {src, dst});
            set_arrow_rank(a, 0, "zero-map", {src, dst});
            if (interior(src) && a > 0) set_surj(a - 1, "exactness", {src});
            if (interior(dst) && a + 1 < L_ - 1) set_inj(a + 1, "exactness", {dst});
        }
        if (s.surj && interior(dst) && a + 1 < L_ - 1) set_zero(a + 1, "exactness", {dst});
        if (s.inj && interior(src) && a > 0) set_zero(a - 1, "exactness", {src});
        if (s.inj && node_[src].group) set_image(a, *node_[src].group, "injective-image", {src, dst});
        if (s.surj && node_[dst].group) set_image(a, *node_[dst].group, "surjective-image", {src, dst});
        if (s.inj && s.surj) {
            if (node_[src].group) set_group(dst, *node_[src].group, "isomorphism", {src, dst});
            if (node_[dst].group) set_group(src, *node_[dst].group, "isomorphism", {src, dst});
        }
        if (s.inj && node_[src].rank) set_arrow_rank(a, *node_[src].rank, "injective-rank", {src});
        if (s.surj && node_[dst].rank) set_arrow_rank(a, *node_[dst].rank, "surjective-rank", {dst});
        if (s.image) {
            set_arrow_rank(a, s.image->rank, "image-rank", {src, dst});
            if (s.image->is_free()) set_image_tf(a, "image-torsion-free", {src, dst});
            if (s.surj) set_group(dst, *s.image, "surjective-image", {src, dst});
            if (s.inj) set_group(src, *s.image, "injective-image", {src, dst});
        }
        if (node_[dst].torsion_free) set_image_tf(a, "torsion-subgroup", {dst});
        if (s.inj && node_[src].torsion_free) set_image_tf(a, "torsion-subgroup", {src});
        // image = kernel of the next map when that map is explicit
        if (a + 1 < L_ - 1 && interior(dst) && p_.arrows[a + 1].matrix) {
            const IntMatrix& M = *p_.arrows[a + 1].matrix;
            set_image(a, FgAbGroup::free(M.cols() - matrix_rank(M)), "kernel-of-matrix", {dst, dst + 1});
        }
        // image = source / image of the previous explicit map
        if (a > 0 && interior(src) && p_.arrows[a - 1].matrix) {
            set_image(a, cokernel(*p_.arrows[a - 1].matrix), "cokernel-of-matrix", {src - 1, src});
        }
        // surjection from a free group whose kernel contains a summand of rank k
        if (s.surj && node_[src].group && node_[src].group->is_free() && node_[dst].rank) {
            const int k = p_.arrows[a].kernel_summand;
            const int q = node_[src].group->rank - k;
            if (q < *node_[dst].rank)
                throw Contradiction(name(dst) + " is a quotient of Z^" + std::to_string(q) + " but has rank " +
                                    std::to_string(*node_[dst].rank));
            if (q == *node_[dst].rank) {
                const std::string rule = k ? "quotient-of-free[" + p_.arrows[a].fact + "]" : "quotient-of-free";
                set_group(dst, FgAbGroup::free(q), rule, {src, dst});
            }
        }
    }
}

void Solver::interior_rules() {
    for (int i = 1; i < L_ - 1; ++i) {
        const ArrowState& in = arrow_[i - 1];
        const ArrowState& out = arrow_[i];
        if (in.zero && out.zero) set_group(i, FgAbGroup{}, "exactness-zero", {i - 1, i, i + 1});
        if (in.image && out.image && out.image->is_free())
            set_group(i, direct_sum(*in.image, *out.image), "split-extension", {i - 1, i, i + 1});
        if (in.image_tf && out.image_tf) set_tf(i, "torsion-extension", {i - 1, i, i + 1});
    }
}

// Rank bookkeeping: b_i = r_{i-1} + r_i at interior nodes, plus annotations.
void Solver::rank_system(bool final_check) {
    const int nb = L_, nr = L_ - 1, nv = nb + nr;
    struct Row {
        std::vector<Rational> c;
        Rational k;
        std::set<int> nodes;
    };
    std::vector<Row> rows;
    auto eq = [&](std::vector<std::pair<int, int>> terms, long k, std::set<int> nodes) {
        Row r{std::vector<Rational>(nv, Rational(0)), Rational(k), std::move(nodes)};
        for (auto [v, c] : terms) r.c[v] += c;
        rows.push_back(std::move(r));
    };
    auto rv = [&](int a) { return nb + a; };
    for (int i = 1; i < L_ - 1; ++i) eq({{i, 1}, {rv(i - 1), -1}, {rv(i), -1}}, 0, {i - 1, i, i + 1});
    for (int i = 0; i < L_; ++i)
        if (node_[i].rank) eq({{i, 1}}, *node_[i].rank, {i});
    for (int a = 0; a < nr; ++a) {
        const ArrowState& s = arrow_[a];
        if (s.rank) eq({{rv(a), 1}}, *s.rank, {a, a + 1});
        if (s.zero) eq({{rv(a), 1}}, 0, {a, a + 1});
        if (s.inj) eq({{rv(a), 1}, {a, -1}}, 0, {a});
        if (s.surj) eq({{rv(a), 1}, {a + 1, -1}}, 0, {a + 1});
    }
    for (const SeqFact& f : p_.facts)
        for (const auto& [x, y] : f.rank_equal) {
            const int i = p_.index_of(x), j = p_.index_of(y);
            eq({{i, 1}, {j, -1}}, 0, {i, j});
        }
    // Gauss-Jordan, tracking which nodes each row came from
    int prow = 0;
    for (int col = 0; col < nv && prow < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int r = prow; r < static_cast<int>(rows.size()); ++r)
            if (rows[r].c[col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[prow], rows[piv]);
        const Rational inv = 1 / rows[prow].c[col];
        for (auto& x : rows[prow].c) x *= inv;
        rows[prow].k *= inv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == prow || rows[r].c[col] == 0) continue;
            const Rational f = rows[r].c[col];
            for (int j = 0; j < nv; ++j) rows[r].c[j] -= f * rows[prow].c[j];
            rows[r].k -= f * rows[prow].k;
            rows[r].nodes.insert(rows[prow].nodes.begin(), rows[prow].nodes.end());
        }
        ++prow;
    }
    auto var_name = [&](int v) { return v < nb ? "rank " + name(v) : "rank im(" + arrow_name(v - nb) + ")"; };
    residual_.clear();
    for (const Row& r : rows) {
        std::vector<int> vars;
        for (int j = 0; j < nv; ++j)
            if (r.c[j] != 0) vars.push_back(j);
        if (vars.empty()) {
            if (r.k != 0) throw Contradiction("rank constraints inconsistent around " + [&] {
                std::string s;
                for (int i : r.nodes) s += (s.empty() ? "" : ",") + name(i);
                return s;
            }());
            continue;
        }
        std::vector<int> in(r.nodes.begin(), r.nodes.end());
        const std::string rule = r.nodes.size() <= 3 ? "exactness-window" : "alternating-sum";
        if (vars.size() == 1) {
            const Rational v = r.k / r.c[vars[0]];
            if (v.get_den() != 1 || v < 0) throw Contradiction(var_name(vars[0]) + " forced to " + v.get_str());
            const int val = static_cast<int>(v.get_num().get_si());
            if (final_check) continue;
            if (vars[0] < nb) set_rank(vars[0], val, rule, in);
            else set_arrow_rank(vars[0] - nb, val, rule, in);
            continue;
        }
        bool pos = true, neg = true;
        for (int j : vars) {
            pos = pos && r.c[j] > 0;
            neg = neg && r.c[j] < 0;
        }
        if ((pos && r.k < 0) || (neg && r.k > 0)) throw Contradiction("nonnegative ranks cannot satisfy a rank constraint");
        if ((pos || neg) && r.k == 0) {
            if (final_check) continue;
            for (int j : vars) {
                if (j < nb) set_rank(j, 0, "nonnegative-sum", in);
                else set_arrow_rank(j - nb, 0, "nonnegative-sum", in);
            }
            continue;
        }
        std::ostringstream os;
        bool first = true;
        for (int j : vars) {
            os << (first ? "" : " + ") << r.c[j].get_str() << "*[" << var_name(j) << "]";
            first = false;
        }
        os << " = " << r.k.get_str();
        residual_.push_back(os.str());
    }
}

void Solver::check_consistency() {
    for (int a = 0; a < L_ - 1; ++a) {
        const ArrowState& s = arrow_[a];
        if (s.zero && s.inj && node_[a].group && !node_[a].group->is_trivial())
            throw Contradiction(arrow_name(a) + " is zero and injective on " + node_[a].group->to_string());
        if (s.zero && s.surj && node_[a + 1].group && !node_[a + 1].group->is_trivial())
            throw Contradiction(arrow_name(a) + " is zero and onto " + node_[a + 1].group->to_string());
        if (s.rank && node_[a].rank && *s.rank > *node_[a].rank)
            throw Contradiction("im(" + arrow_name(a) + ") larger than " + name(a));
        if (s.rank && node_[a + 1].rank && *s.rank > *node_[a + 1].rank)
            throw Contradiction("im(" + arrow_name(a) + ") larger than " + name(a + 1));
    }
}

SolveResult Solver::run() {
    SolveResult res;
    try {
        init();
        do {
            changed_ = false;
            node_rules();
            arrow_rules();
            interior_rules();
            check_consistency();
            if (!changed_) rank_system(false);
        } while (changed_);
        rank_system(true);
        res.status = SolveResult::Status::Solved;
        for (int i = 0; i < L_; ++i)
            if (!node_[i].group) {
                res.status = SolveResult::Status::Underdetermined;
                std::string what = name(i) + ": ";
                if (node_[i].rank) what += "rank " + std::to_string(*node_[i].rank);
                else what += "rank unknown";
                if (node_[i].torsion_free) what += ", torsion-free";
                else if (node_[i].rank) what += ", torsion unknown";
                res.residual.push_back(what);
            }
        for (const auto& r : residual_) res.residual.push_back(r);
    } catch (const Contradiction& c) {
        res.status = SolveResult::Status::Contradiction;
        res.witness = c.what();
    }
    for (int i = 0; i < L_; ++i) res.groups.push_back(node_[i].group);
    for (int a = 0; a < L_ - 1; ++a) res.arrow_ranks.push_back(arrow_[a].rank);
    res.log = log_;
    return res;
}

}  // namespace

int SequenceProblem::index_of(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        if (nodes[i].name == name) return i;
    return -1;
}

void SequenceProblem::validate() const {
    if (nodes.size() < 2) throw std::invalid_argument("sequence needs at least two nodes");
    if (arrows.size() + 1 != nodes.size()) throw std::invalid_argument("need exactly one arrow between consecutive nodes");
    std::set<std::string> names;
    for (const auto& n : nodes) {
        if (n.name.empty()) throw std::invalid_argument("node without a name");
        if (!names.insert(n.name).second) throw std::invalid_argument("duplicate node name " + n.name);
    }
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const SeqArrow& ar = arrows[a];
        if (ar.kernel_summand < 0) throw std::invalid_argument("negative kernel_summand");
        if (ar.rank && *ar.rank < 0) throw std::invalid_argument("negative arrow rank");
        if (ar.tag == SeqArrow::Tag::Zero && ar.rank && *ar.rank != 0)
            throw std::invalid_argument("arrow " + std::to_string(a) + " tagged zero with nonzero rank");
    }
    for (const auto& f : facts)
        for (const auto& [x, y] : f.rank_equal)
            if (index_of(x) < 0 || index_of(y) < 0) throw std::invalid_argument("fact " + f.name + " names an unknown node");
}

nlohmann::json SequenceProblem::to_json() const {
    nlohmann::json ns = nlohmann::json::array(), as = nlohmann::json::array(), fs = nlohmann::json::array();
    for (const auto& n : nodes) {
        if (n.known) ns.push_back({{"known", n.known->to_json()}, {"name", n.name}});
        else ns.push_back({{"unknown", n.name}});
    }
    for (const auto& a : arrows) {
        nlohmann::json j = {{"tag", tag_name(a.tag)}};
        if (a.rank) j["rank"] = *a.rank;
        if (a.kernel_summand) j["kernel_summand"] = a.kernel_summand;
        if (!a.fact.empty()) j["fact"] = a.fact;
        if (a.matrix) {
            nlohmann::json m = nlohmann::json::array();
            for (const auto& row : a.matrix->to_dense()) {
                nlohmann::json r = nlohmann::json::array();
                for (const auto& x : row) r.push_back(x.get_si());
                m.push_back(r);
            }
            j["matrix"] = m;
            j["shape"] = {a.matrix->rows(), a.matrix->cols()};
        }
        as.push_back(j);
    }
    for (const auto& f : facts) {
        nlohmann::json j = {{"name", f.name}, {"source", f.source}};
        if (!f.rank_equal.empty()) {
            nlohmann::json eqs = nlohmann::json::array();
            for (const auto& [x, y] : f.rank_equal) eqs.push_back({x, y});
            j["rank_equal"] = eqs;
        }
        fs.push_back(j);
    }
    return {{"nodes", ns}, {"arrows", as}, {"facts", fs}};
}

SequenceProblem SequenceProblem::from_json(const nlohmann::json& j) {
    SequenceProblem p;
    int anon = 0;
    for (const auto& n : j.at("nodes")) {
        SeqNode node;
        if (n.contains("unknown")) {
            node.name = n.at("unknown").get<std::string>();
        } else if (n.contains("known")) {
            node.known = FgAbGroup::from_json(n.at("known"));
            node.name = n.value("name", "n" + std::to_string(anon));
        } else {
            throw std::invalid_argument("node needs 'known' or 'unknown'");
        }
        ++anon;
        p.nodes.push_back(std::move(node));
    }
    if (j.contains("arrows"))
        for (const auto& a : j.at("arrows")) {
            SeqArrow ar;
            ar.tag = tag_of(a.value("tag", "none"));
            if (a.contains("rank")) ar.rank = a.at("rank").get<int>();
            ar.kernel_summand = a.value("kernel_summand", 0);
            ar.fact = a.value("fact", "");
            if (a.contains("matrix")) {
                std::vector<std::vector<long>> rows = a.at("matrix").get<std::vector<std::vector<long>>>();
                int r = static_cast<int>(rows.size()), c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
                if (a.contains("shape")) {
                    r = a.at("shape").at(0).get<int>();
                    c = a.at("shape").at(1).get<int>();
                }
                IntMatrix M(r, c);
                for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
                    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged matrix");
                    for (int k = 0; k < c; ++k) M.set(i, k, Integer(rows[i][k]));
                }
                ar.matrix = M;
            }
            p.arrows.push_back(std::move(ar));
        }
    if (j.contains("facts"))
        for (const auto& f : j.at("facts")) {
            SeqFact fact{f.at("name").get<std::string>(), f.value("source", ""), {}};
            if (f.contains("rank_equal"))
                for (const auto& e : f.at("rank_equal")) fact.rank_equal.push_back({e.at(0), e.at(1)});
            p.facts.push_back(std::move(fact));
        }
    p.validate();
    return p;
}

std::optional<FgAbGroup> SolveResult::group(const SequenceProblem& p, const std::string& name) const {
    const int i = p.index_of(name);
    if (i < 0 || i >= static_cast<int>(groups.size())) return std::nullopt;
    return groups[i];
}

std::string to_string(SolveResult::Status s) {
    switch (s) {
        case SolveResult::Status::Solved: return "solved";
        case SolveResult::Status::Underdetermined: return "underdetermined";
        case SolveResult::Status::Contradiction: return "contradiction";
    }
    return "?";
}

nlohmann::json SolveResult::to_json(const SequenceProblem& p) const {
    nlohmann::json vals = nlohmann::json::object();
    for (std::size_t i = 0; i < groups.size(); ++i)
        vals[p.nodes[i].name] = groups[i] ? groups[i]->to_json() : nlohmann::json(nullptr);
    nlohmann::json lg = nlohmann::json::array();
    for (const auto& d : log) lg.push_back({{"rule", d.rule}, {"inputs", d.inputs}, {"conclusion", d.conclusion}});
    nlohmann::json out = {{"status", to_string(status)}, {"values", vals}, {"log", lg}, {"residual", residual}};
    if (!witness.empty()) out["witness"] = witness;
    return out;
}

SolveResult solve(const SequenceProblem& p) {
    p.validate();
    return Solver(p).run();
}

}  // namespace hypcy
