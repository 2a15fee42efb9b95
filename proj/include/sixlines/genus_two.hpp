#pragma once

#include <array>
#include <vector>

#include "sixlines/invariants.hpp"
#include "sixlines/rational.hpp"
#include "sixlines/weighted.hpp"

namespace sixlines {

// y^2 = x (x-1) (x-l1) (x-l2) (x-l3); lambdas distinct, not 0 or 1
struct RosenhainCurve {
    Rational l1, l2, l3;
};
RosenhainCurve make_rosenhain(const Rational& l1, const Rational& l2, const Rational& l3);

// point [u : v] of the projective line
struct ProjRoot {
    Rational u, v;
};

// the six branch points {0, 1, l1, l2, l3, infinity}
std::array<ProjRoot, 6> sextic_roots(const RosenhainCurve& c);

struct IgusaInvariants {
    Rational i2, i4, i6, i10;

    // weights (1,2,3,5): the invariants scale by l^1, l^2, l^3, l^5 under the
    // Mobius action
    WeightedPoint<Rational> as_weighted_point() const {
        return WeightedPoint<Rational>({i2, i4, i6, i10}, {1, 2, 3, 5});
    }
};

// Classical root-difference invariants of the binary sextic with the given
// projective roots. A Mobius map determined by mobius_seed sends every root to
// a finite position; the result is well defined as a weighted point.
IgusaInvariants igusa_clebsch(const std::array<ProjRoot, 6>& roots, unsigned mobius_seed = 0);

struct RestrictionReport {
    bool r_zero;
    bool j4_zero;
    bool weighted_equal_ok;
    JInvariants j;            // configuration route
    IgusaInvariants igusa;    // binary-sextic route
    bool all_ok() const { return r_zero && j4_zero && weighted_equal_ok; }
};

// Computes the configuration J-point of the tangent-lines realization and the
// Igusa-Clebsch combination of the curve, and compares them in P(2,3,4,5,6).
RestrictionReport restriction_check(const RosenhainCurve& c);

// the Igusa-Clebsch combination [I4/4 : (I2 I4 - 3 I6)/8 : 0 : -243 I10/4 : 243 I2 I10/32]
WeightedPoint<Rational> igusa_moduli_point(const IgusaInvariants& ic);

}  // namespace sixlines
