#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypcy/geom/golden_matrix.hpp"

namespace hypcy {

/// Coxeter diagram; absent edges carry label 2.
struct CoxeterDiagram {
    int rank = 0;
    std::map<std::pair<int, int>, int> labels;  // keys with first < second

    /// Linear diagram from a Schlafli symbol, e.g. {5,3,3} gives rank 4.
    static CoxeterDiagram linear(const std::vector<int>& schlafli);
    int label(int i, int j) const;
    /// Sub-diagram on the given generator indices (relabelled 0..k-1).
    CoxeterDiagram restrict_to(const std::vector<int>& nodes) const;
    std::string to_string() const;
};

/// Symmetric bilinear form in the basis of unit facet normals.
struct GramMatrix {
    GoldenMatrix entries;

    int rank() const { return entries.rows(); }
    const GoldenScalar& operator()(int i, int j) const { return entries(i, j); }
    nlohmann::json to_json() const;
};

struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    friend bool operator==(const Signature& a, const Signature& b) {
        return a.positive == b.positive && a.negative == b.negative && a.zero == b.zero;
    }
    std::string to_string() const;
};

/// -cos(pi/m) on off-diagonals; only labels 2, 3 and 5 are representable.
GramMatrix gram_of_diagram(const CoxeterDiagram& d);

/// Exact inertia of a symmetric golden matrix via symmetric reduction.
Signature signature(const GoldenMatrix& g);
inline Signature signature(const GramMatrix& g) { return signature(g.entries); }

/// A vector given by coordinates in the basis of simple roots (facet normals).
struct NormalBasisVector {
    std::vector<GoldenScalar> coords;
    std::shared_ptr<const GramMatrix> gram;

    int dim() const { return static_cast<int>(coords.size()); }
    static NormalBasisVector basis(std::shared_ptr<const GramMatrix> g, int i);
};

GoldenScalar inner(const NormalBasisVector& u, const NormalBasisVector& v);
GoldenScalar inner(const GramMatrix& g, const std::vector<GoldenScalar>& u, const std::vector<GoldenScalar>& v);

/// sigma_i(v) = v - 2 <e_i, v> e_i.
NormalBasisVector reflect(int i, const NormalBasisVector& v);

/// Matrix of sigma_i acting on normal-basis coordinates.
GoldenMatrix reflection_matrix(const GramMatrix& g, int i);

/// Reflection in the hyperplane orthogonal to an arbitrary non-null vector d.
GoldenMatrix reflection_in(const GramMatrix& g, const std::vector<GoldenScalar>& d);

/**
 * -<u, v> for unit spacelike u, v. Throws std::invalid_argument on non-unit
 * input. The value -1 (u == v) is a degenerate configuration; see
 * is_degenerate_dihedral.
 */
GoldenScalar dihedral_cosine(const NormalBasisVector& u, const NormalBasisVector& v);
inline bool is_degenerate_dihedral(const GoldenScalar& c) { return c == GoldenScalar(1) || c == GoldenScalar(-1); }

/// A matrix claimed to preserve a Gram form; check with is_isometry.
struct LorentzMatrix {
    GoldenMatrix entries;
};

bool is_isometry(const GoldenMatrix& m, const GramMatrix& g);
inline bool is_isometry(const LorentzMatrix& m, const GramMatrix& g) { return is_isometry(m.entries, g); }

}  // namespace hypcy
