#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hypcy {

/// Product of degree-2 generators, generator name -> exponent.
using Monomial = std::map<std::string, int>;

/// Polynomial in commuting degree-2 generators with integer coefficients.
class GradedClass {
public:
    GradedClass() = default;
    static GradedClass constant(long c);
    static GradedClass gen(const std::string& name, long coef = 1);
    static GradedClass monomial(const Monomial& m, long coef = 1);

    const std::map<Monomial, long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long coefficient(const Monomial& m) const;
    /// Part of cohomological degree 2k.
    GradedClass degree_part(int k) const;
    int max_degree() const;  // cohomological; -1 for zero

    GradedClass& operator+=(const GradedClass& o);
    GradedClass& operator-=(const GradedClass& o);
    friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
    friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
    friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
    friend GradedClass operator*(long s, const GradedClass& a);
    GradedClass operator-() const { return -1 * *this; }
    friend bool operator==(const GradedClass& a, const GradedClass& b) { return a.terms_ == b.terms_; }

    /// Replace generators by classes.
    GradedClass substitute(const std::map<std::string, GradedClass>& s) const;
    std::string to_string() const;

private:
    void add_term(const Monomial& m, long c);
    std::map<Monomial, long> terms_;
};

/**
 * Cohomology ring of a closed manifold presented by generators, vanishing
 * monomials and values of top-degree monomials on the fundamental class.
 */
struct PairingRing {
    std::string fundamental_class;
    int top_degree = 0;                  // cohomological
    std::vector<Monomial> relations;     // monomials that vanish
    std::map<Monomial, long> evaluation; // top-degree monomial -> value

    GradedClass reduce(const GradedClass& c) const;
    /// <c, [M]>; throws if c has a nonzero part outside the top degree.
    long pair(const GradedClass& c) const;
};

/// E = S^2 x T^2 with g1 from the sphere, g2 from the torus: g1^2 = g2^2 = 0, <g1 g2, E> = 1.
PairingRing sphere_times_elliptic();

class BundleExpr;
using Bundle = std::shared_ptr<const BundleExpr>;

class BundleExpr {
public:
    enum class Kind { Leaf, Sum, Dual, Lambda2, Line };

    /// Named bundle of rank r; its formal Chern roots are name_1..name_r.
    static Bundle leaf(const std::string& name, int rank);
    static Bundle sum(Bundle a, Bundle b);
    static Bundle dual(Bundle a);
    static Bundle lambda2(Bundle a);
    /// Line bundle with c1 = sum_i degrees[i] * generators[i].
    static Bundle line(const std::vector<std::string>& generators, const std::vector<long>& degrees);
    static Bundle trivial(int rank);

    Kind kind() const { return kind_; }
    int rank() const { return rank_; }
    std::string to_string() const;

    const std::string& name() const { return name_; }
    const std::vector<Bundle>& children() const { return children_; }
    const std::vector<std::string>& generators() const { return gens_; }
    const std::vector<long>& degrees() const { return degrees_; }

private:
    Kind kind_ = Kind::Leaf;
    int rank_ = 0;
    std::string name_;
    std::vector<Bundle> children_;
    std::vector<std::string> gens_;
    std::vector<long> degrees_;
};

/// Generator standing for c1 of a leaf bundle.
std::string c1_symbol(const std::string& leaf);

/**
 * c1 by the structural rules. Leaves contribute the generator c1(name).
 * When steps is given, one line per rule application is appended.
 */
GradedClass c1(const Bundle& e, std::vector<std::string>* steps = nullptr);

/// Formal Chern roots (splitting principle); leaf roots are generators name_i.
std::vector<GradedClass> chern_roots(const Bundle& e);
/// Substitution c1(leaf) -> sum of the leaf's roots, for comparing the two computations.
std::map<std::string, GradedClass> leaf_root_substitution(const Bundle& e);

/// c_k as the k-th elementary symmetric function of the roots.
GradedClass chern_class(const Bundle& e, int k);
/// 1 + c_1 + ... through cohomological degree 2*max_k.
GradedClass total_chern(const Bundle& e, int max_k);
/// c1^2 - 2 c2.
GradedClass p1(const Bundle& e);

/**
 * <c_k(e), [M]>. The class of degree 2k must reach the top degree; for k = 1
 * on a four-manifold this pairs c1^2 (a lone c1 has no top-degree part).
 * Throws std::domain_error when 2k exceeds the top degree.
 */
long chern_pairing(const Bundle& e, int k, const PairingRing& ring);

struct TwistorResult {
    int n = 0;
    GradedClass c1_in_h;      // in terms of c1(H)
    GradedClass c1_in_omega;  // after [omega] = -c1(H)
    long coefficient = 0;     // of [omega]
    bool roots_agree = false; // splitting-principle cross-check
    std::vector<std::string> steps;
    nlohmann::json to_json() const;
};

/// TZ = Lambda^2 H^* + H with rank H = n.
TwistorResult twistor_c1(int n);
inline long twistor_c1_coefficient(int n) { return twistor_c1(n).coefficient; }

struct ResolutionCheck {
    GradedClass c1;
    long c1_squared = 0;
    long c2 = 0;
    GradedClass p1;
    long p1_value = 0;
    long e_squared = 0;  // e of bidegree (-2, 0)
    std::vector<std::string> steps;
    bool ok() const { return c1.is_zero() && c1_squared == 0 && c2 == 0 && p1.is_zero() && p1_value == 0 && e_squared == 0; }
    nlohmann::json to_json() const;
};

/// TX|_E = O(-2,0) + O(2,0) + O on E = S^2 x T^2.
ResolutionCheck resolution_check();

}  // namespace hypcy
