#include "hypcy/coxeter/group.hpp"

#include <stdexcept>
#include <string>

namespace hypcy {

std::size_t ReflectionGroup::KeyHash::operator()(const std::vector<ZPhi>& m) const noexcept {
    std::size_t h = m.size();
    for (const ZPhi& z : m) {
        hash_combine(h, static_cast<std::size_t>(z.a));
        hash_combine(h, static_cast<std::size_t>(z.b));
    }
    return h;
}

void ReflectionGroup::enumerate(std::size_t order_bound) {
    const int n = dim_;
    const std::size_t ng = nodes_.size();
    gram2_.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram2_[i * n + j] = ZPhi::from_golden(GoldenScalar(2) * gram_(i, j));

    std::vector<ZPhi> id(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) id[i * n + i] = {1, 0};
    mats_.push_back(id);
    words_.emplace_back();
    index_.emplace(id, 0);

    for (std::size_t x = 0; x < mats_.size(); ++x) {
        for (std::size_t g = 0; g < ng; ++g) {
            const int k = nodes_[g];
            std::vector<ZPhi> m = mats_[x];
            // M S_k: column c loses M[:,k] * 2G[k,c]
            for (int c = 0; c < n; ++c) {
                ZPhi f = gram2_[k * n + c];
                if (f.is_zero()) continue;
                for (int r = 0; r < n; ++r) m[r * n + c] = m[r * n + c] - mats_[x][r * n + k] * f;
            }
            auto it = index_.find(m);
            Elem y;
            if (it == index_.end()) {
                if (mats_.size() >= order_bound)
                    throw std::runtime_error("group larger than bound (possibly infinite): bound " +
                                             std::to_string(order_bound));
                y = static_cast<Elem>(mats_.size());
                auto w = words_[x];
                w.push_back(static_cast<std::uint8_t>(g));
                words_.push_back(std::move(w));
                index_.emplace(m, y);
                mats_.push_back(std::move(m));
            } else {
                y = it->second;
            }
            right_.push_back(y);
        }
    }

    left_.resize(mats_.size() * ng);
    for (std::size_t x = 0; x < mats_.size(); ++x)
        for (std::size_t g = 0; g < ng; ++g) {
            const int k = nodes_[g];
            std::vector<ZPhi> m = mats_[x];
            // S_k M: row k loses sum_c 2G[k,c] M[c,:]
            for (int c = 0; c < n; ++c) {
                ZPhi f = gram2_[k * n + c];
                if (f.is_zero()) continue;
                for (int j = 0; j < n; ++j) m[k * n + j] = m[k * n + j] - f * mats_[x][c * n + j];
            }
            left_[x * ng + g] = index_.at(m);
        }
}

ReflectionGroup generate_group(const CoxeterDiagram& d, std::size_t order_bound) {
    if (order_bound < 1) throw std::invalid_argument("generate_group: order_bound must be >= 1");
    ReflectionGroup G;
    G.diagram_ = d;
    G.gram_ = gram_of_diagram(d);
    G.dim_ = d.rank;
    for (int i = 0; i < d.rank; ++i) G.nodes_.push_back(i);
    G.enumerate(order_bound);
    return G;
}

ReflectionGroup generate_parabolic(const GramMatrix& g, const std::vector<int>& nodes, std::size_t order_bound) {
    if (order_bound < 1) throw std::invalid_argument("generate_parabolic: order_bound must be >= 1");
    ReflectionGroup G;
    G.gram_ = g;
    G.dim_ = g.rank();
    G.nodes_ = nodes;
    G.diagram_.rank = static_cast<int>(nodes.size());
    const GoldenScalar c3(Rational(-1, 2));
    const GoldenScalar c5(Rational(0), Rational(-1, 2));
    for (int a = 0; a < G.diagram_.rank; ++a)
        for (int b = a + 1; b < G.diagram_.rank; ++b) {
            const GoldenScalar& e = g(nodes[a], nodes[b]);
            if (e == c3) G.diagram_.labels[{a, b}] = 3;
            else if (e == c5) G.diagram_.labels[{a, b}] = 5;
            else if (!e.is_zero())
                throw std::invalid_argument("generate_parabolic: Gram entry " + e.to_string() + " is not a supported label");
        }
    G.enumerate(order_bound);
    return G;
}

ReflectionGroup::Elem ReflectionGroup::multiply(Elem x, Elem y) const {
    for (std::uint8_t l : words_[y]) x = right_gen(x, l);
    return x;
}

ReflectionGroup::Elem ReflectionGroup::inverse(Elem x) const {
    Elem r = 0;
    const auto& w = words_[x];
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = right_gen(r, *it);
    return r;
}

ReflectionGroup::Elem ReflectionGroup::longest() const {
    // BFS order is by length, so the last element has maximal length.
    return static_cast<Elem>(words_.size() - 1);
}

GoldenMatrix ReflectionGroup::matrix(Elem x) const {
    GoldenMatrix m(dim_, dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) m(r, c) = mats_[x][r * dim_ + c].to_golden();
    return m;
}

std::vector<ZPhi> ReflectionGroup::raw_matrix(Elem x) const { return mats_[x]; }

std::optional<ReflectionGroup::Elem> ReflectionGroup::find(const GoldenMatrix& m) const {
    if (m.rows() != dim_ || m.cols() != dim_) return std::nullopt;
    std::vector<ZPhi> key(static_cast<std::size_t>(dim_) * dim_);
    try {
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) key[r * dim_ + c] = ZPhi::from_golden(m(r, c));
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<GoldenScalar> ReflectionGroup::apply(Elem x, const std::vector<GoldenScalar>& v) const {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("ReflectionGroup::apply: dimension mismatch");
    std::vector<GoldenScalar> out(dim_);
    const auto& m = mats_[x];
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) {
            const ZPhi& e = m[r * dim_ + c];
            if (!e.is_zero() && !v[c].is_zero()) out[r] += e.to_golden() * v[c];
        }
    return out;
}

}  // namespace hypcy
