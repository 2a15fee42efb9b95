#pragma once

#include <stdexcept>
#include <vector>

#include "sixlines/quadext.hpp"
#include "sixlines/rational.hpp"

namespace sixlines {

// Point of a weighted projective space; not all coordinates zero.
template <class K>
struct WeightedPoint {
    std::vector<K> coords;
    std::vector<int> weights;

    WeightedPoint(std::vector<K> c, std::vector<int> w)
        : coords(std::move(c)), weights(std::move(w)) {
        if (coords.size() != weights.size())
            throw std::invalid_argument("WeightedPoint: size mismatch");
        bool any = false;
        for (const K& v : coords) any = any || !(v == K(0));
        if (!any) throw std::invalid_argument("WeightedPoint: all coordinates zero");
    }
};

// Equality in weighted projective space over the algebraic closure: the
// zero-coordinate patterns agree and every nonzero pair passes the
// cross-power test p_i^{w_j} q_j^{w_i} = q_i^{w_j} p_j^{w_i}. The scaling
// factor need not live in K itself, which is why powers are compared pairwise.
template <class K>
bool weighted_equal(const WeightedPoint<K>& p, const WeightedPoint<K>& q) {
    if (p.weights != q.weights) throw std::invalid_argument("weighted_equal: weight mismatch");
    const size_t n = p.coords.size();
    for (size_t i = 0; i < n; ++i)
        if ((p.coords[i] == K(0)) != (q.coords[i] == K(0))) return false;
    for (size_t i = 0; i < n; ++i) {
        if (p.coords[i] == K(0)) continue;
        for (size_t j = i + 1; j < n; ++j) {
            if (p.coords[j] == K(0)) continue;
            K lhs = p.coords[i].pow(p.weights[j]) * q.coords[j].pow(p.weights[i]);
            K rhs = q.coords[i].pow(p.weights[j]) * p.coords[j].pow(p.weights[i]);
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

inline WeightedPoint<QuadExt> promote(const WeightedPoint<Rational>& p) {
    std::vector<QuadExt> c;
    c.reserve(p.coords.size());
    for (const auto& v : p.coords) c.emplace_back(v);
    return WeightedPoint<QuadExt>(std::move(c), p.weights);
}

}  // namespace sixlines
