#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hypcy/coxeter/zphi.hpp"
#include "hypcy/geom/lorentz.hpp"

namespace hypcy {

/**
 * A finite group generated by reflections, stored as exact matrices over
 * Z[phi] acting on normal-basis coordinates.
 *
 * Elements are numbered in shortlex order of their minimal generator words
 * (element 0 is the identity). That order depends only on the Coxeter
 * presentation, so a parabolic subgroup enumerated inside a bigger
 * representation gets the same numbering as the standalone group.
 */
class ReflectionGroup {
public:
    using Elem = std::uint32_t;

    const CoxeterDiagram& diagram() const { return diagram_; }
    const GramMatrix& gram() const { return gram_; }
    /// Indices into the Gram matrix of the generating reflections.
    const std::vector<int>& generator_nodes() const { return nodes_; }
    int num_generators() const { return static_cast<int>(nodes_.size()); }
    int dim() const { return dim_; }
    std::size_t order() const { return words_.size(); }

    /// Shortlex-minimal word; letters are generator positions 0..k-1.
    const std::vector<std::uint8_t>& word(Elem x) const { return words_[x]; }
    Elem right_gen(Elem x, int g) const { return right_[x * nodes_.size() + g]; }
    Elem left_gen(int g, Elem x) const { return left_[x * nodes_.size() + g]; }

    Elem multiply(Elem x, Elem y) const;
    Elem inverse(Elem x) const;
    /// Longest element (largest word length), unique in a finite Coxeter group.
    Elem longest() const;

    GoldenMatrix matrix(Elem x) const;
    std::vector<ZPhi> raw_matrix(Elem x) const;
    std::optional<Elem> find(const GoldenMatrix& m) const;
    std::vector<GoldenScalar> apply(Elem x, const std::vector<GoldenScalar>& v) const;

    /// Raises std::runtime_error if enumeration would exceed order_bound.
    friend ReflectionGroup generate_group(const CoxeterDiagram& d, std::size_t order_bound);
    friend ReflectionGroup generate_parabolic(const GramMatrix& g, const std::vector<int>& nodes,
                                              std::size_t order_bound);

private:
    struct KeyHash {
        std::size_t operator()(const std::vector<ZPhi>& m) const noexcept;
    };

    void enumerate(std::size_t order_bound);

    CoxeterDiagram diagram_;
    GramMatrix gram_;
    std::vector<int> nodes_;
    int dim_ = 0;
    std::vector<ZPhi> gram2_;  // 2*G, integral
    std::vector<std::vector<ZPhi>> mats_;
    std::vector<std::vector<std::uint8_t>> words_;
    std::vector<Elem> right_;
    std::vector<Elem> left_;
    std::unordered_map<std::vector<ZPhi>, Elem, KeyHash> index_;
};

ReflectionGroup generate_group(const CoxeterDiagram& d, std::size_t order_bound);

/// The subgroup generated by the reflections in `nodes`, acting on the full
/// space of the Gram matrix g.
ReflectionGroup generate_parabolic(const GramMatrix& g, const std::vector<int>& nodes, std::size_t order_bound);

}  // namespace hypcy
