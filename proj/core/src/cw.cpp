#include "hypcy/complex/cw.hpp"

#include <cstdio>
#include <stdexcept>

namespace hypcy {

CwComplex CwComplex::with_counts(const std::vector<int>& counts) {
    CwComplex c;
    c.counts = counts;
    for (int k = 0; k < static_cast<int>(counts.size()); ++k)
        c.boundary.emplace_back(k == 0 ? 0 : counts[k - 1], counts[k]);
    return c;
}

std::string CwComplex::cell_id(int k, int i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "d%d_%04d", k, i);
    return buf;
}

bool CwComplex::boundary_squares_to_zero(std::string* witness) const {
    for (int k = 2; k <= dim(); ++k) {
        IntMatrix dd = boundary[k - 1] * boundary[k];
        if (!dd.is_zero()) {
            if (witness) {
                for (int c = 0; c < dd.cols(); ++c)
                    if (!dd.column(c).empty()) {
                        *witness = "d" + std::to_string(k - 1) + "d" + std::to_string(k) + " nonzero on " + cell_id(k, c);
                        break;
                    }
            }
            return false;
        }
    }
    return true;
}

nlohmann::json CwComplex::to_json() const {
    nlohmann::json cells = nlohmann::json::array();
    nlohmann::json bd = nlohmann::json::array();
    for (int k = 0; k <= dim(); ++k)
        for (int i = 0; i < counts[k]; ++i) {
            cells.push_back({{"id", cell_id(k, i)}, {"dim", k}});
            if (k == 0) continue;
            for (const auto& [r, v] : boundary[k].column(i))
                bd.push_back({{"cell", cell_id(k, i)}, {"face", cell_id(k - 1, r)}, {"coeff", v.get_si()}});
        }
    nlohmann::json lab = nlohmann::json::object();
    for (const auto& [name, ids] : labels) lab[name] = ids;
    return {{"cells", cells}, {"boundary", bd}, {"labels", lab}};
}

CellMap CellMap::identity(std::shared_ptr<const CwComplex> c) {
    CellMap f{c, c, {}};
    for (int k = 0; k <= c->dim(); ++k) f.maps.push_back(IntMatrix::identity(c->count(k)));
    return f;
}

CellMap CellMap::compose(const CellMap& other) const {
    if (maps.size() != other.maps.size()) throw std::invalid_argument("CellMap::compose: degree mismatch");
    CellMap f{other.source, target, {}};
    for (std::size_t k = 0; k < maps.size(); ++k) f.maps.push_back(maps[k] * other.maps[k]);
    return f;
}

bool CellMap::is_chain_map(std::string* witness) const {
    for (int k = 1; k < static_cast<int>(maps.size()); ++k) {
        if (target->boundary[k] * maps[k] != maps[k - 1] * source->boundary[k]) {
            if (witness) *witness = "chain-map identity fails in degree " + std::to_string(k);
            return false;
        }
    }
    return true;
}

bool CellMap::is_identity() const {
    for (const auto& m : maps)
        if (!m.is_identity()) return false;
    return true;
}

std::optional<int> CellMap::order(int max_order) const {
    CellMap p = *this;
    for (int k = 1; k <= max_order; ++k) {
        if (p.is_identity()) return k;
        p = compose(p);
    }
    return std::nullopt;
}

}  // namespace hypcy
