#include "sixlines/invariants.hpp"

#include <stdexcept>

#include "sixlines/quintic_tables.hpp"

namespace sixlines {

SatakeCoordinates satake_from_t(const std::array<Rational, 10>& t) {
    return SatakeCoordinates{satake_from_t_generic(t)};
}

PowerSums power_sums(const SatakeCoordinates& x) {
    auto s = power_sums_generic(x.x);
    return PowerSums{s};
}

JInvariants j_invariants(const SatakeCoordinates& x) {
    Rational s1(0);
    for (const auto& xi : x.x) s1 += xi;
    if (!s1.is_zero()) throw std::invalid_argument("j_invariants: s1 != 0");
    auto j = j_from_power_sums_generic(power_sums_generic(x.x));
    return JInvariants{j[0], j[1], j[2], j[3], j[4]};
}

JInvariants j_invariants_of(const Configuration& c) {
    return j_invariants(satake_from_t(do_coordinates(c).t));
}

SatakeSextic satake_sextic(const JInvariants& j) {
    SatakeSextic s;
    s.b = RatPoly(std::vector<Rational>{Rational(-2) * j.j3, Rational(-3) * j.j2, Rational(0),
                                        Rational(1)});
    s.a = RatPoly(std::vector<Rational>{j.j6, -j.j5, j.j4});
    s.s = s.b * s.b - Rational(4) * s.a;
    return s;
}

DerivedInvariants derived_invariants(const JInvariants& j) {
    SatakeSextic sx = satake_sextic(j);
    DerivedInvariants d;
    d.disc_a = j.j5 * j.j5 - Rational(4) * j.j4 * j.j6;
    // formal degrees (2,3): the convention under which the resultant stays the
    // fixed degree-18 polynomial in the J's even when J4 vanishes
    d.res_ab = resultant_formal(sx.a, sx.b, 2, 3);
    d.disc_s = discriminant(sx.s);
    return d;
}

StratumFlags stratum_from_invariants(const JInvariants& j, const DerivedInvariants& d) {
    StratumFlags f;
    f.valid = j.valid();
    f.tangent = j.j4.is_zero();
    f.concurrent = d.disc_a.is_zero();
    f.cases34 = d.disc_a.is_zero() && d.res_ab.is_zero();
    f.case5 = j.j4.is_zero() && j.j5.is_zero();
    f.disc_s_zero = d.disc_s.is_zero();
    return f;
}

namespace {

// prefactors turning the integer term tables into J'_2..J'_6
const Rational kQuinticPrefactor[5] = {
    Rational(1, 2), Rational(-1, 4), Rational(81, 16), Rational(-81, 8), Rational(81, 16),
};

MultiPoly table_poly(const QuinticTerm* terms, size_t n) {
    MultiPoly p(4);
    for (size_t i = 0; i < n; ++i) {
        const auto& t = terms[i];
        p.add_term({t.ea, t.eb, t.ec, t.ed}, Rational(t.coeff));
    }
    return p;
}

}  // namespace

JInvariants j_invariants_closed_form(const Rational& a, const Rational& b, const Rational& c,
                                     const Rational& d) {
    const std::vector<Rational> pt{a, b, c, d};
    Rational out[5];
    for (int k = 0; k < 5; ++k) {
        Rational acc(0);
        auto [terms, n] = quintic_table(k);
        for (size_t i = 0; i < n; ++i) {
            const auto& t = terms[i];
            acc += Rational(t.coeff) * a.pow(t.ea) * b.pow(t.eb) * c.pow(t.ec) * d.pow(t.ed);
        }
        out[k] = kQuinticPrefactor[k] * acc;
    }
    return JInvariants{out[0], out[1], out[2], out[3], out[4]};
}

std::array<MultiPoly, 5> j_closed_form_symbolic() {
    std::array<MultiPoly, 5> out{MultiPoly(4), MultiPoly(4), MultiPoly(4), MultiPoly(4),
                                 MultiPoly(4)};
    for (int k = 0; k < 5; ++k) {
        auto [terms, n] = quintic_table(k);
        out[k] = table_poly(terms, n) * kQuinticPrefactor[k];
    }
    return out;
}

namespace {

MultiPoly mvar(int i) { return MultiPoly::variable(4, i); }
MultiPoly mconst(int v) { return MultiPoly::constant(4, Rational(v)); }

// 3x3 determinant over Q[a,b,c,d]
MultiPoly det3m(const std::array<std::array<MultiPoly, 3>, 3>& m) {
    MultiPoly r(4);
    r += m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
    r -= m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]);
    r += m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return r;
}

constexpr int kTPairsSym[10][2][3] = {
    {{1, 3, 5}, {2, 4, 6}}, {{1, 4, 5}, {2, 3, 6}}, {{1, 4, 6}, {2, 3, 5}},
    {{1, 3, 6}, {2, 4, 5}}, {{1, 2, 5}, {3, 4, 6}}, {{1, 2, 6}, {3, 4, 5}},
    {{1, 3, 4}, {2, 5, 6}}, {{1, 2, 4}, {3, 5, 6}}, {{1, 5, 6}, {2, 3, 4}},
    {{1, 2, 3}, {4, 5, 6}},
};

}  // namespace

SymbolicCoordinates symbolic_t_determinant() {
    // columns of the moduli normal form: z1, z2, z3, z1+z2+z3, z1+a z2+b z3, z1+c z2+d z3
    const MultiPoly a = mvar(0), b = mvar(1), c = mvar(2), d = mvar(3);
    const MultiPoly zero = MultiPoly(4), one = mconst(1);
    std::array<std::array<MultiPoly, 3>, 6> col{{
        {one, zero, zero},
        {zero, one, zero},
        {zero, zero, one},
        {one, one, one},
        {one, a, b},
        {one, c, d},
    }};
    auto det = [&](int i, int j, int k) {
        return det3m({{{col[i - 1][0], col[j - 1][0], col[k - 1][0]},
                       {col[i - 1][1], col[j - 1][1], col[k - 1][1]},
                       {col[i - 1][2], col[j - 1][2], col[k - 1][2]}}});
    };
    SymbolicCoordinates out{{MultiPoly(4), MultiPoly(4), MultiPoly(4), MultiPoly(4), MultiPoly(4),
                             MultiPoly(4), MultiPoly(4), MultiPoly(4), MultiPoly(4), MultiPoly(4)},
                            MultiPoly(4)};
    for (int n = 0; n < 10; ++n) {
        const auto& p = kTPairsSym[n];
        out.t[n] = det(p[0][0], p[0][1], p[0][2]) * det(p[1][0], p[1][1], p[1][2]);
    }
    out.r = det(1, 2, 3) * det(1, 4, 5) * det(2, 4, 6) * det(3, 5, 6) -
            det(1, 2, 4) * det(1, 3, 5) * det(2, 3, 6) * det(4, 5, 6);
    return out;
}

SymbolicCoordinates symbolic_t_closed() {
    const MultiPoly a = mvar(0), b = mvar(1), c = mvar(2), d = mvar(3);
    const MultiPoly one = mconst(1);
    SymbolicCoordinates out{{
                                a * (d - one),           // t1
                                b - a,                   // t2
                                d - c,                   // t3
                                c * (b - one),           // t4
                                b * (c - one),           // t5
                                d * (a - one),           // t6
                                d - b,                   // t7
                                c - a,                   // t8
                                a * d - b * c,           // t9
                                a * d - b * c - a + b + c - d,  // t10
                            },
                            MultiPoly(4)};
    out.r = -(a * b * c) + a * b * d + a * c * d - b * c * d - a * d + b * c;
    return out;
}

}  // namespace sixlines
