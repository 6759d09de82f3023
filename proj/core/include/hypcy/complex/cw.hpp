#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypcy/homology/intmatrix.hpp"

namespace hypcy {

/**
 * A finite CW complex given by cell counts and integer boundary matrices.
 * boundary[k] maps C_k -> C_{k-1} (rows = count(k-1), cols = count(k));
 * boundary[0] is the empty 0 x count(0) matrix.
 */
struct CwComplex {
    std::vector<int> counts;
    std::vector<IntMatrix> boundary;
    std::map<std::string, std::vector<std::string>> labels;

    static CwComplex with_counts(const std::vector<int>& counts);

    int dim() const { return static_cast<int>(counts.size()) - 1; }
    int count(int k) const { return k >= 0 && k <= dim() ? counts[k] : 0; }
    static std::string cell_id(int k, int i);

    /// Checks d_{k-1} d_k == 0 for all k; names the first offending degree.
    bool boundary_squares_to_zero(std::string* witness = nullptr) const;
    nlohmann::json to_json() const;
};

/// Cellular chain map between complexes, one integer matrix per degree.
struct CellMap {
    std::shared_ptr<const CwComplex> source;
    std::shared_ptr<const CwComplex> target;
    std::vector<IntMatrix> maps;

    static CellMap identity(std::shared_ptr<const CwComplex> c);
    /// (this o other): apply other first.
    CellMap compose(const CellMap& other) const;
    bool is_chain_map(std::string* witness = nullptr) const;
    bool is_identity() const;
    friend bool operator==(const CellMap& a, const CellMap& b) { return a.maps == b.maps; }
    /// Least k >= 1 with f^k = id, searched up to max_order.
    std::optional<int> order(int max_order = 64) const;
};

}  // namespace hypcy
