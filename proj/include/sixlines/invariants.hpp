#pragma once

#include <array>

#include "sixlines/configuration.hpp"
#include "sixlines/multipoly.hpp"
#include "sixlines/rational.hpp"
#include "sixlines/unipoly.hpp"
#include "sixlines/weighted.hpp"

namespace sixlines {

struct SatakeCoordinates {
    std::array<Rational, 6> x;  // x1..x6, sum zero
};

struct PowerSums {
    std::array<Rational, 5> s;  // s2..s6
    const Rational& operator[](int j) const { return s.at(j - 2); }
};

struct JInvariants {
    Rational j2, j3, j4, j5, j6;

    WeightedPoint<Rational> as_weighted_point() const {
        return WeightedPoint<Rational>({j2, j3, j4, j5, j6}, {2, 3, 4, 5, 6});
    }
    bool valid() const { return !(j3.is_zero() && j4.is_zero() && j5.is_zero()); }
    friend bool operator==(const JInvariants& a, const JInvariants& b) {
        return a.j2 == b.j2 && a.j3 == b.j3 && a.j4 == b.j4 && a.j5 == b.j5 && a.j6 == b.j6;
    }
};

// B cubic, A quadratic, S = B^2 - 4A the Satake sextic
struct SatakeSextic {
    RatPoly b, a, s;
};

struct DerivedInvariants {
    Rational disc_a;   // J5^2 - 4 J4 J6
    Rational res_ab;   // Res(A, B)
    Rational disc_s;   // Disc(S)
};

struct StratumFlags {
    bool valid;        // (J3,J4,J5) != (0,0,0)
    bool tangent;      // J4 = 0
    bool concurrent;   // Disc(A) = 0
    bool cases34;      // Disc(A) = Res(A,B) = 0
    bool case5;        // J4 = J5 = 0
    bool disc_s_zero;  // Disc(S) = 0
};

// The Satake coordinates and J's are linear/polynomial maps over any Q-algebra;
// the templated forms are shared by the numeric route and the symbolic route
// over Q[a,b,c,d].
template <class R>
std::array<R, 6> satake_from_t_generic(const std::array<R, 10>& t) {
    const R &t1 = t[0], &t5 = t[4], &t6 = t[5], &t7 = t[6], &t8 = t[7];
    return {
        t1 * Rational(2) + t5 * Rational(2) - t6 * Rational(3) - t7 - t8,
        (-t1) - t5 - t7 + t8 * Rational(2),
        (-t1) + t5 * Rational(2) - t7 - t8,
        (-t1) - t5 + t6 * Rational(3) + t7 * Rational(2) + t8 * Rational(2),
        (-t1) - t5 + t7 * Rational(2) - t8,
        t1 * Rational(2) - t5 - t7 - t8,
    };
}

template <class R>
std::array<R, 5> power_sums_generic(const std::array<R, 6>& x) {
    std::array<R, 5> s{x[0] * Rational(0), x[0] * Rational(0), x[0] * Rational(0),
                       x[0] * Rational(0), x[0] * Rational(0)};
    for (const R& xi : x) {
        R p = xi * xi;
        s[0] += p;          // s2
        p = p * xi;
        s[1] += p;          // s3
        p = p * xi;
        s[2] += p;          // s4
        p = p * xi;
        s[3] += p;          // s5
        p = p * xi;
        s[4] += p;          // s6
    }
    return s;
}

template <class R>
std::array<R, 5> j_from_power_sums_generic(const std::array<R, 5>& s) {
    const R &s2 = s[0], &s3 = s[1], &s4 = s[2], &s5 = s[3], &s6 = s[4];
    R j2 = s2 * Rational(1, 12);
    R j3 = s3 * Rational(1, 12);
    R j4 = (s4 * Rational(4) - s2 * s2) * Rational(1, 64);
    R j5 = (s2 * s3 * Rational(5) - s5 * Rational(12)) * Rational(1, 240);
    R j6 = (s2 * s2 * s2 * Rational(3) - s3 * s3 * Rational(4) - s2 * s4 * Rational(18) +
            s6 * Rational(24)) *
           Rational(1, 576);
    return {j2, j3, j4, j5, j6};
}

SatakeCoordinates satake_from_t(const std::array<Rational, 10>& t);
PowerSums power_sums(const SatakeCoordinates& x);

// rejects s1 != 0
JInvariants j_invariants(const SatakeCoordinates& x);

JInvariants j_invariants_of(const Configuration& c);

SatakeSextic satake_sextic(const JInvariants& j);

DerivedInvariants derived_invariants(const JInvariants& j);

StratumFlags stratum_from_invariants(const JInvariants& j, const DerivedInvariants& d);

// closed forms of the alternate-fibration coefficients in the moduli a,b,c,d
JInvariants j_invariants_closed_form(const Rational& a, const Rational& b, const Rational& c,
                                     const Rational& d);
std::array<MultiPoly, 5> j_closed_form_symbolic();  // in Q[a,b,c,d]

// symbolic moduli routes over Q[a,b,c,d] (variables in order a,b,c,d)
struct SymbolicCoordinates {
    std::array<MultiPoly, 10> t;
    MultiPoly r;
};
SymbolicCoordinates symbolic_t_determinant();  // Plucker-determinant route
SymbolicCoordinates symbolic_t_closed();       // closed-form route

}  // namespace sixlines
