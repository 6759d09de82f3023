#include "hypcy/chern/chern.hpp"

#include <sstream>
#include <stdexcept>

namespace hypcy {

namespace {

int mono_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [g, e] : m) d += 2 * e;
    return d;
}

Monomial mono_mul(Monomial a, const Monomial& b) {
    for (const auto& [g, e] : b) a[g] += e;
    return a;
}

bool divides(const Monomial& r, const Monomial& m) {
    for (const auto& [g, e] : r) {
        auto it = m.find(g);
        if (it == m.end() || it->second < e) return false;
    }
    return true;
}

}  // namespace

GradedClass GradedClass::constant(long c) {
    GradedClass x;
    x.add_term({}, c);
    return x;
}

GradedClass GradedClass::monomial(const Monomial& m, long coef) {
    GradedClass x;
    x.add_term(m, coef);
    return x;
}

GradedClass GradedClass::gen(const std::string& name, long coef) {
    GradedClass x;
    x.add_term({{name, 1}}, coef);
    return x;
}

void GradedClass::add_term(const Monomial& m, long c) {
    if (c == 0) return;
    long& v = terms_[m];
    v += c;
    if (v == 0) terms_.erase(m);
}

long GradedClass::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

GradedClass GradedClass::degree_part(int k) const {
    GradedClass x;
    for (const auto& [m, c] : terms_)
        if (mono_degree(m) == 2 * k) x.add_term(m, c);
    return x;
}

int GradedClass::max_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
    return d;
}

GradedClass& GradedClass::operator+=(const GradedClass& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

GradedClass operator*(const GradedClass& a, const GradedClass& b) {
    GradedClass x;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) x.add_term(mono_mul(ma, mb), ca * cb);
    return x;
}

GradedClass operator*(long s, const GradedClass& a) {
    GradedClass x;
    for (const auto& [m, c] : a.terms_) x.add_term(m, s * c);
    return x;
}

GradedClass GradedClass::substitute(const std::map<std::string, GradedClass>& s) const {
    GradedClass out;
    for (const auto& [m, c] : terms_) {
        GradedClass t = constant(c);
        for (const auto& [g, e] : m) {
            auto it = s.find(g);
            const GradedClass base = it == s.end() ? gen(g) : it->second;
            for (int i = 0; i < e; ++i) t = t * base;
        }
        out += t;
    }
    return out;
}

std::string GradedClass::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        long a = c;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            a = c < 0 ? -c : c;
        } else if (c < 0 && !m.empty()) {
            os << "-";
            a = -c;
        }
        first = false;
        if (m.empty()) {
            os << a;
            continue;
        }
        if (a != 1) os << a << "*";
        bool f2 = true;
        for (const auto& [g, e] : m) {
            if (!f2) os << "*";
            f2 = false;
            os << g;
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

GradedClass PairingRing::reduce(const GradedClass& c) const {
    GradedClass out;
    for (const auto& [m, k] : c.terms()) {
        bool dead = mono_degree(m) > top_degree;
        for (const auto& r : relations) dead = dead || divides(r, m);
        if (!dead) out += GradedClass::monomial(m, k);
    }
    return out;
}

long PairingRing::pair(const GradedClass& c) const {
    const GradedClass r = reduce(c);
    long v = 0;
    for (const auto& [m, k] : r.terms()) {
        if (mono_degree(m) != top_degree)
            throw std::domain_error("pair: class has a part of degree " + std::to_string(mono_degree(m)) +
                                    " below the top degree " + std::to_string(top_degree));
        auto it = evaluation.find(m);
        if (it == evaluation.end()) throw std::domain_error("pair: no value for a top-degree monomial");
        v += k * it->second;
    }
    return v;
}

PairingRing sphere_times_elliptic() {
    PairingRing r;
    r.fundamental_class = "E";
    r.top_degree = 4;
    r.relations = {{{"g1", 2}}, {{"g2", 2}}};
    r.evaluation = {{{{"g1", 1}, {"g2", 1}}, 1}};
    return r;
}

Bundle BundleExpr::leaf(const std::string& name, int rank) {
    if (rank < 0) throw std::invalid_argument("BundleExpr::leaf: negative rank");
    auto b = std::make_shared<BundleExpr>();
    b->kind_ = Kind::Leaf;
    b->rank_ = rank;
    b->name_ = name;
    return b;
}

Bundle BundleExpr::sum(Bundle a, Bundle c) {
    auto b = std::make_shared<BundleExpr>();
    b->kind_ = Kind::Sum;
    b->rank_ = a->rank() + c->rank();
    b->children_ = {std::move(a), std::move(c)};
    return b;
}

Bundle BundleExpr::dual(Bundle a) {
    auto b = std::make_shared<BundleExpr>();
    b->kind_ = Kind::Dual;
    b->rank_ = a->rank();
    b->children_ = {std::move(a)};
    return b;
}

Bundle BundleExpr::lambda2(Bundle a) {
    if (a->rank() == 0) throw std::invalid_argument("BundleExpr::lambda2: rank-0 bundle");
    auto b = std::make_shared<BundleExpr>();
    b->kind_ = Kind::Lambda2;
    b->rank_ = a->rank() * (a->rank() - 1) / 2;
    b->children_ = {std::move(a)};
    return b;
}

Bundle BundleExpr::line(const std::vector<std::string>& generators, const std::vector<long>& degrees) {
    if (generators.size() != degrees.size()) throw std::invalid_argument("BundleExpr::line: degree vector length");
    auto b = std::make_shared<BundleExpr>();
    b->kind_ = Kind::Line;
    b->rank_ = 1;
    b->gens_ = generators;
    b->degrees_ = degrees;
    return b;
}

Bundle BundleExpr::trivial(int rank) {
    Bundle b = line({}, {});
    for (int i = 1; i < rank; ++i) b = sum(b, line({}, {}));
    return rank == 0 ? leaf("0", 0) : b;
}

std::string BundleExpr::to_string() const {
    switch (kind_) {
        case Kind::Leaf:
            return name_;
        case Kind::Sum:
            return "(" + children_[0]->to_string() + " + " + children_[1]->to_string() + ")";
        case Kind::Dual:
            return children_[0]->to_string() + "*";
        case Kind::Lambda2:
            return "L2(" + children_[0]->to_string() + ")";
        case Kind::Line: {
            std::string s = "O(";
            for (std::size_t i = 0; i < degrees_.size(); ++i) s += (i ? "," : "") + std::to_string(degrees_[i]);
            return s + ")";
        }
    }
    return "?";
}

std::string c1_symbol(const std::string& leaf) { return "c1(" + leaf + ")"; }

GradedClass c1(const Bundle& e, std::vector<std::string>* steps) {
    GradedClass r;
    switch (e->kind()) {
        case BundleExpr::Kind::Leaf:
            r = e->rank() == 0 ? GradedClass() : GradedClass::gen(c1_symbol(e->name()));
            break;
        case BundleExpr::Kind::Sum: {
            r = c1(e->children()[0], steps);
            r += c1(e->children()[1], steps);
            break;
        }
        case BundleExpr::Kind::Dual:
            r = -c1(e->children()[0], steps);
            break;
        case BundleExpr::Kind::Lambda2:
            r = static_cast<long>(e->children()[0]->rank() - 1) * c1(e->children()[0], steps);
            break;
        case BundleExpr::Kind::Line:
            for (std::size_t i = 0; i < e->degrees().size(); ++i) r += GradedClass::gen(e->generators()[i], e->degrees()[i]);
            break;
    }
    if (steps && e->kind() != BundleExpr::Kind::Leaf) steps->push_back("c1(" + e->to_string() + ") = " + r.to_string());
    return r;
}

std::vector<GradedClass> chern_roots(const Bundle& e) {
    switch (e->kind()) {
        case BundleExpr::Kind::Leaf: {
            std::vector<GradedClass> r;
            for (int i = 1; i <= e->rank(); ++i) r.push_back(GradedClass::gen(e->name() + "_" + std::to_string(i)));
            return r;
        }
        case BundleExpr::Kind::Sum: {
            std::vector<GradedClass> r = chern_roots(e->children()[0]);
            for (auto& x : chern_roots(e->children()[1])) r.push_back(x);
            return r;
        }
        case BundleExpr::Kind::Dual: {
            std::vector<GradedClass> r = chern_roots(e->children()[0]);
            for (auto& x : r) x = -x;
            return r;
        }
        case BundleExpr::Kind::Lambda2: {
            const std::vector<GradedClass> a = chern_roots(e->children()[0]);
            std::vector<GradedClass> r;
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = i + 1; j < a.size(); ++j) r.push_back(a[i] + a[j]);
            return r;
        }
        case BundleExpr::Kind::Line: {
            GradedClass x;
            for (std::size_t i = 0; i < e->degrees().size(); ++i) x += GradedClass::gen(e->generators()[i], e->degrees()[i]);
            return {x};
        }
    }
    return {};
}

std::map<std::string, GradedClass> leaf_root_substitution(const Bundle& e) {
    std::map<std::string, GradedClass> s;
    if (e->kind() == BundleExpr::Kind::Leaf) {
        GradedClass sum;
        for (const auto& x : chern_roots(e)) sum += x;
        s[c1_symbol(e->name())] = sum;
    }
    for (const auto& c : e->children())
        for (auto& [k, v] : leaf_root_substitution(c)) s[k] = v;
    return s;
}

namespace {

// elementary symmetric functions e_0..e_kmax
std::vector<GradedClass> elementary(const std::vector<GradedClass>& roots, int kmax) {
    std::vector<GradedClass> e(kmax + 1);
    e[0] = GradedClass::constant(1);
    for (const auto& x : roots)
        for (int k = kmax; k >= 1; --k) e[k] += e[k - 1] * x;
    return e;
}

}  // namespace

GradedClass chern_class(const Bundle& e, int k) {
    if (k < 0) throw std::invalid_argument("chern_class: negative degree");
    return elementary(chern_roots(e), k)[k];
}

GradedClass total_chern(const Bundle& e, int max_k) {
    GradedClass t;
    for (const auto& x : elementary(chern_roots(e), max_k)) t += x;
    return t;
}

GradedClass p1(const Bundle& e) {
    const GradedClass a = chern_class(e, 1);
    return a * a - 2 * chern_class(e, 2);
}

long chern_pairing(const Bundle& e, int k, const PairingRing& ring) {
    if (k < 1 || 2 * k > ring.top_degree)
        throw std::domain_error("chern_pairing: c_" + std::to_string(k) + " exceeds the pairing dimension " +
                                std::to_string(ring.top_degree));
    GradedClass c = chern_class(e, k);
    if (2 * k < ring.top_degree) {
        if (ring.top_degree % (2 * k) != 0) throw std::domain_error("chern_pairing: degree does not divide the top degree");
        GradedClass p = GradedClass::constant(1);
        for (int i = 0; i < ring.top_degree / (2 * k); ++i) p = p * c;
        c = p;
    }
    return ring.pair(c);
}

TwistorResult twistor_c1(int n) {
    if (n < 1) throw std::invalid_argument("twistor_c1: n >= 1");
    TwistorResult r;
    r.n = n;
    const Bundle H = BundleExpr::leaf("H", n);
    const Bundle TZ = BundleExpr::sum(BundleExpr::lambda2(BundleExpr::dual(H)), H);
    r.c1_in_h = c1(TZ, &r.steps);
    // declared relation [omega] = -c1(H)
    r.c1_in_omega = r.c1_in_h.substitute({{c1_symbol("H"), GradedClass::gen("omega", -1)}});
    r.steps.push_back("[omega] = -c1(H): c1(TZ) = " + r.c1_in_omega.to_string());
    for (const auto& [m, c] : r.c1_in_omega.terms())
        if (m != Monomial{{"omega", 1}}) throw std::logic_error("twistor_c1: c1 not a multiple of [omega]");
    r.coefficient = r.c1_in_omega.coefficient({{"omega", 1}});
    r.roots_agree = r.c1_in_h.substitute(leaf_root_substitution(TZ)) == chern_class(TZ, 1);
    return r;
}

nlohmann::json TwistorResult::to_json() const {
    return {{"n", n},
            {"c1", c1_in_h.to_string()},
            {"c1_omega", c1_in_omega.to_string()},
            {"coefficient", coefficient},
            {"roots_agree", roots_agree},
            {"steps", steps}};
}

ResolutionCheck resolution_check() {
    const PairingRing E = sphere_times_elliptic();
    const std::vector<std::string> g = {"g1", "g2"};
    const Bundle T = BundleExpr::sum(BundleExpr::sum(BundleExpr::line(g, {-2, 0}), BundleExpr::line(g, {2, 0})),
                                     BundleExpr::line(g, {0, 0}));
    ResolutionCheck r;
    r.c1 = E.reduce(c1(T, &r.steps));
    r.c1_squared = chern_pairing(T, 1, E);
    r.steps.push_back("<c1^2, E> = " + std::to_string(r.c1_squared));
    r.c2 = chern_pairing(T, 2, E);
    r.steps.push_back("c2 = " + E.reduce(chern_class(T, 2)).to_string() + ", <c2, E> = " + std::to_string(r.c2));
    r.p1 = E.reduce(p1(T));
    r.p1_value = E.pair(r.p1);
    r.steps.push_back("p1 = c1^2 - 2 c2 = " + r.p1.to_string());
    const GradedClass e = GradedClass::gen("g1", -2);
    r.e_squared = E.pair(e * e);
    r.steps.push_back("e = " + e.to_string() + ", <e^2, E> = " + std::to_string(r.e_squared));
    return r;
}

nlohmann::json ResolutionCheck::to_json() const {
    return {{"c1", c1.to_string()}, {"c1_squared", c1_squared}, {"c2", c2}, {"p1", p1.to_string()},
            {"p1_value", p1_value}, {"e_squared", e_squared},   {"ok", ok()}, {"steps", steps}};
}

}  // namespace hypcy
