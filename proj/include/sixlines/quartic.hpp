#pragma once

#include <optional>
#include <variant>

#include "sixlines/fibration.hpp"
#include "sixlines/invariants.hpp"
#include "sixlines/multipoly.hpp"
#include "sixlines/weighted.hpp"

namespace sixlines {

// variables of the quartic family, in MultiPoly order X, Y, Z, W
inline constexpr int kQX = 0, kQY = 1, kQZ = 2, kQW = 3;

// the defining degree-4 form of Q(alpha..zeta) in P^3
MultiPoly quartic_poly(const SexticParams<Rational>& p);

// [alpha : beta : gamma*epsilon : gamma*zeta + delta*epsilon : delta*zeta]
// with weights (2,3,4,5,6)
template <class K>
WeightedPoint<K> moduli_match(const SexticParams<K>& p) {
    if ((p.gamma == K(0) && p.delta == K(0)) || (p.epsilon == K(0) && p.zeta == K(0)))
        throw std::invalid_argument("moduli_match: unpolarized parameters");
    return WeightedPoint<K>({p.alpha, p.beta, p.gamma * p.epsilon,
                             p.gamma * p.zeta + p.delta * p.epsilon, p.delta * p.zeta},
                            {2, 3, 4, 5, 6});
}

// quartic parameters reproducing the weighted point of a valid J-tuple; rational
// when Disc(A) is a square, otherwise over Q(sqrt(D)) with D its squarefree core
using SolvedParams = std::variant<SexticParams<Rational>, SexticParams<QuadExt>>;
SolvedParams solve_params(const JInvariants& j);

SexticParams<QuadExt> promote_params(const SexticParams<Rational>& p);

struct SymmetryReport {
    bool scaling_ok;      // weighted rescaling via the degree-8/9/6 automorphism
    bool swap_ok;         // (gamma,delta) <-> (epsilon,zeta) birational involution
    bool isom_fixes_moduli;  // (gamma,delta,epsilon,zeta) -> (t g, t d, e/t, z/t)
    bool all_ok() const { return scaling_ok && swap_ok && isom_fixes_moduli; }
};
// t must be a nonzero rational; the scaling identity is tracked in Q[q]/(q^2 - t)
SymmetryReport verify_symmetries(const SexticParams<Rational>& p, const Rational& t);

struct ProjectionReport {
    bool standard_ok;   // plane pencil through Z=W=0 yields the standard Weierstrass form
    bool alternate_ok;  // pencil through X=W=0 yields the alternate Weierstrass form
    bool all_ok() const { return standard_ok && alternate_ok; }
};
ProjectionReport verify_projections(const SexticParams<Rational>& p);

}  // namespace sixlines
