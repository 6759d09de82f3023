#pragma once

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypcy/complex/regular.hpp"

namespace hypcy {

/// Identification of the closure of one cell with the closure of another.
struct Gluing {
    int dim = 0;
    int cell = 0;
    int partner = 0;
    CellPerm map;  // defined at least on closure(cell), carries cell to partner
};

/**
 * A regular complex with gluings of some of its cells. The gluings must come
 * in inverse pairs: for every gluing of a to b there is one of b to a whose
 * map inverts it on closure(b).
 */
struct QuotientSpec {
    std::shared_ptr<const RegularComplex> complex;
    std::vector<Gluing> gluings;
};

/**
 * Orbit cells of a glued complex. Every cell x lies in the orbit of its
 * representative rho = rep(orbit(x)); the transport path is a sequence of
 * gluings carrying rho to x, and [x] = sign(x) [orbit] in the chain complex.
 */
class QuotientComplex {
public:
    const QuotientSpec& spec() const { return spec_; }
    const RegularComplex& base() const { return *spec_.complex; }
    const CwComplex& cw() const { return *cw_; }
    std::shared_ptr<const CwComplex> cw_ptr() const { return cw_; }

    int orbit_count(int k) const { return static_cast<int>(reps_[k].size()); }
    std::vector<int> orbit_counts() const;
    int orbit(int k, int x) const { return orbit_[k][x]; }
    int rep(int k, int o) const { return reps_[k][o]; }
    int sign(int k, int x) const { return sign_[k][x]; }
    const std::vector<int>& path(int k, int x) const { return path_[k][x]; }
    /// Apply a transport path (or its inverse) to a cell.
    int transport(const std::vector<int>& path, int k, int x) const;
    int transport_back(const std::vector<int>& path, int k, int x) const;
    int inverse_gluing(int g) const { return inverse_[g]; }
    /// Gluings whose domain closure contains cell x.
    const std::vector<int>& gluings_at(int k, int x) const { return gluings_at_[k][x]; }

    friend QuotientComplex quotient_complex(const QuotientSpec& q);

private:
    QuotientSpec spec_;
    std::shared_ptr<CwComplex> cw_;
    std::vector<int> inverse_;
    std::vector<std::vector<int>> orbit_, reps_, sign_;
    std::vector<std::vector<std::vector<int>>> path_;
    std::vector<std::vector<std::vector<int>>> gluings_at_;  // per cell: gluings whose domain contains it
};

/**
 * Builds the orbit complex. Throws std::runtime_error naming the orbit when
 * orientation transport is inconsistent or a cell is glued to itself by a
 * nontrivial map.
 */
QuotientComplex quotient_complex(const QuotientSpec& q);

/**
 * Chain map induced on the quotient by an automorphism phi of the base
 * complex. Throws std::runtime_error with a cell witness when phi does not
 * respect the identifications.
 */
CellMap induced_map(const QuotientComplex& q, const CellPerm& phi);

struct FixedStratum {
    int dim = 0;
    int orbit = 0;
    bool pointwise = false;       // the whole closed cell is fixed
    bool isolated_point = false;  // exactly one fixed point, in the interior
};

struct FixedStrataReport {
    std::vector<FixedStratum> strata;  // setwise-fixed orbits
    std::vector<int> setwise;          // per dimension
    std::vector<int> isolated;         // per dimension
    std::vector<int> pointwise;        // per dimension
    std::vector<int> free_pairs;       // per dimension, for involutions
    int order = 0;
    int isolated_total() const;
    /// True when every fixed cell contributes a single isolated point.
    bool finite_fixed_set() const;
    nlohmann::json to_json() const;
};

/**
 * Setwise-fixed orbit cells of the map induced by phi, and how phi acts on
 * each of them. A cell symmetry of finite order fixes the barycenter; its
 * fixed set is a single interior point exactly when no proper face is
 * invariant. Throws if phi has no finite order up to max_order.
 */
FixedStrataReport fixed_strata(const QuotientComplex& q, const CellPerm& phi, int max_order = 64);

}  // namespace hypcy
