#include "sixlines/quartic.hpp"

namespace sixlines {

MultiPoly quartic_poly(const SexticParams<Rational>& p) {
    MultiPoly q(4);
    const Rational half(1, 2);
    // Y^2 Z W - 4 X^3 Z + 3a X Z W^2 + b Z W^3 + g X Z^2 W - (d Z^2 W^2 + z W^4)/2 + e X W^3
    q.add_term({0, 2, 1, 1}, Rational(1));
    q.add_term({3, 0, 1, 0}, Rational(-4));
    q.add_term({1, 0, 1, 2}, Rational(3) * p.alpha);
    q.add_term({0, 0, 1, 3}, p.beta);
    q.add_term({1, 0, 2, 1}, p.gamma);
    q.add_term({0, 0, 2, 2}, -half * p.delta);
    q.add_term({0, 0, 0, 4}, -half * p.zeta);
    q.add_term({1, 0, 0, 3}, p.epsilon);
    return q;
}

SexticParams<QuadExt> promote_params(const SexticParams<Rational>& p) {
    return {QuadExt(p.alpha), QuadExt(p.beta),    QuadExt(p.gamma),
            QuadExt(p.delta), QuadExt(p.epsilon), QuadExt(p.zeta)};
}

SolvedParams solve_params(const JInvariants& j) {
    if (!j.valid())
        throw std::invalid_argument("solve_params: (J3,J4,J5) = (0,0,0) is not a valid point");
    if (!j.j4.is_zero()) {
        // epsilon = 1, gamma = J4, zeta a root of J4 z^2 - J5 z + J6, delta = J5 - J4 zeta
        Rational disc = j.j5 * j.j5 - Rational(4) * j.j4 * j.j6;
        Rational two_j4 = Rational(2) * j.j4;
        if (auto root = disc.sqrt_exact()) {
            Rational zeta = (j.j5 + *root) / two_j4;
            Rational delta = j.j5 - j.j4 * zeta;
            return SexticParams<Rational>{j.j2, j.j3, j.j4, delta, Rational(1), zeta};
        }
        QuadExt sq = QuadExt::sqrt_of(disc);  // k*sqrt(D) with the +sqrt(D) branch
        QuadExt zeta = (QuadExt(j.j5) + sq) / QuadExt(two_j4);
        QuadExt delta = QuadExt(j.j5) - QuadExt(j.j4) * zeta;
        return SexticParams<QuadExt>{QuadExt(j.j2),  QuadExt(j.j3), QuadExt(j.j4),
                                     delta,          QuadExt(Rational(1)), zeta};
    }
    if (!j.j5.is_zero()) {
        // gamma = 0: A(t) = -delta (epsilon t - zeta) needs delta*epsilon = J5, delta*zeta = J6
        return SexticParams<Rational>{j.j2, j.j3, Rational(0), j.j5, Rational(1), j.j6 / j.j5};
    }
    // J4 = J5 = 0: A constant; (gamma,delta,epsilon,zeta) = (0,1,0,J6)
    if (j.j6.is_zero())
        throw std::invalid_argument(
            "solve_params: J4 = J5 = J6 = 0 admits no polarized quartic parameters");
    return SexticParams<Rational>{j.j2, j.j3, Rational(0), Rational(1), Rational(0), j.j6};
}

namespace {

// variables for the scaling check: X, Y, Z, W, q with q^2 = t
MultiPoly reduce_q(const MultiPoly& p, const Rational& t) {
    MultiPoly out(5);
    for (const auto& [e, c] : p.terms()) {
        MultiPoly::Expo e2 = e;
        int qe = e2[4];
        e2[4] = qe % 2;
        out.add_term(e2, c * t.pow(qe / 2));
    }
    return out;
}

MultiPoly embed5(const MultiPoly& p4) {
    // X,Y,Z,W poly -> same poly in (X,Y,Z,W,q)
    MultiPoly out(5);
    for (const auto& [e, c] : p4.terms()) out.add_term({e[0], e[1], e[2], e[3], 0}, c);
    return out;
}

}  // namespace

SymmetryReport verify_symmetries(const SexticParams<Rational>& p, const Rational& t) {
    if (t.is_zero()) throw std::invalid_argument("verify_symmetries: t must be nonzero");
    SymmetryReport rep{};

    // scaled parameters (t^2 a, t^3 b, t^5 g, t^6 d, e/t, z)
    SexticParams<Rational> scaled{t.pow(2) * p.alpha, t.pow(3) * p.beta,  t.pow(5) * p.gamma,
                                  t.pow(6) * p.delta, p.epsilon / t, p.zeta};
    // substitute [q^8 X : q^9 Y : Z : q^6 W] into Q_scaled; expect q^24 * Q_p
    MultiPoly qs = embed5(quartic_poly(scaled));
    std::vector<MultiPoly> images;
    images.push_back(MultiPoly::monomial(5, Rational(1), {1, 0, 0, 0, 8}));   // X -> q^8 X
    images.push_back(MultiPoly::monomial(5, Rational(1), {0, 1, 0, 0, 9}));   // Y -> q^9 Y
    images.push_back(MultiPoly::variable(5, 2));                              // Z
    images.push_back(MultiPoly::monomial(5, Rational(1), {0, 0, 0, 1, 6}));   // W -> q^6 W
    images.push_back(MultiPoly::variable(5, 4));                              // q
    MultiPoly lhs = reduce_q(qs.substitute(images), t);
    MultiPoly rhs = reduce_q(embed5(quartic_poly(p)) * MultiPoly::monomial(5, Rational(1),
                                                                           {0, 0, 0, 0, 24}),
                             t);
    rep.scaling_ok = lhs == rhs;

    // swap involution: Q_p(XZ, YZ, W^2, ZW) == Z^2 W^2 * Q_(a,b,e,z,g,d)
    std::vector<MultiPoly> swp;
    swp.push_back(MultiPoly::monomial(4, Rational(1), {1, 0, 1, 0}));  // XZ
    swp.push_back(MultiPoly::monomial(4, Rational(1), {0, 1, 1, 0}));  // YZ
    swp.push_back(MultiPoly::monomial(4, Rational(1), {0, 0, 0, 2}));  // W^2
    swp.push_back(MultiPoly::monomial(4, Rational(1), {0, 0, 1, 1}));  // ZW
    MultiPoly lhs2 = quartic_poly(p).substitute(swp);
    SexticParams<Rational> swapped{p.alpha, p.beta, p.epsilon, p.zeta, p.gamma, p.delta};
    MultiPoly rhs2 =
        quartic_poly(swapped) * MultiPoly::monomial(4, Rational(1), {0, 0, 2, 2});
    rep.swap_ok = lhs2 == rhs2;

    // (gamma,delta,epsilon,zeta) -> (t g, t d, e/t, z/t) fixes the weighted moduli point
    SexticParams<Rational> iso{p.alpha,       p.beta,        t * p.gamma,
                               t * p.delta,   p.epsilon / t, p.zeta / t};
    rep.isom_fixes_moduli = weighted_equal(moduli_match(p), moduli_match(iso));
    return rep;
}

ProjectionReport verify_projections(const SexticParams<Rational>& p) {
    if ((p.gamma == Rational(0) && p.delta == Rational(0)) ||
        (p.epsilon == Rational(0) && p.zeta == Rational(0)))
        throw std::invalid_argument("verify_projections: unpolarized parameters");
    ProjectionReport rep{};
    const MultiPoly Q = quartic_poly(p);

    // -- standard: (X, Y, Z, W) = (-s x, y, 4 s^4, -4 s^3) in Q[x, y, s]
    {
        std::vector<MultiPoly> im;
        im.push_back(MultiPoly::monomial(3, Rational(-1), {1, 0, 1}));  // X -> -s x
        im.push_back(MultiPoly::variable(3, 1));                        // Y -> y
        im.push_back(MultiPoly::monomial(3, Rational(4), {0, 0, 4}));   // Z -> 4 s^4
        im.push_back(MultiPoly::monomial(3, Rational(-4), {0, 0, 3}));  // W -> -4 s^3
        MultiPoly lhs = Q.substitute(im);

        auto model = x_standard(p);
        MultiPoly weier(3);  // y^2 - x^3 - f(s) x - g(s)
        weier.add_term({0, 2, 0}, Rational(1));
        weier.add_term({3, 0, 0}, Rational(-1));
        for (int i = 0; i <= model.a4.degree(); ++i)
            weier.add_term({1, 0, i}, -model.a4.coeff(i));
        for (int i = 0; i <= model.a6.degree(); ++i)
            weier.add_term({0, 0, i}, -model.a6.coeff(i));
        MultiPoly rhs = weier * MultiPoly::monomial(3, Rational(-16), {0, 0, 7});
        rep.standard_ok = lhs == rhs;
    }

    // -- alternate: (X, Y^2, Z, W) = (t x^3, 2 x^4 y^2, 2 x^2 (zeta - eps t), 2 x^3)
    // in Q[x, y, t]; Y occurs only squared in the quartic
    {
        std::vector<MultiPoly> im;
        im.push_back(MultiPoly::monomial(3, Rational(1), {3, 0, 1}));  // X -> t x^3
        im.push_back(MultiPoly(3));                                    // Y slot unused
        MultiPoly Zim = MultiPoly::monomial(3, Rational(2) * p.zeta, {2, 0, 0});
        Zim.add_term({2, 0, 1}, Rational(-2) * p.epsilon);             // Z -> 2 x^2 (zeta - eps t)
        im.push_back(Zim);
        im.push_back(MultiPoly::monomial(3, Rational(2), {3, 0, 0}));  // W -> 2 x^3
        MultiPoly y2 = MultiPoly::monomial(3, Rational(2), {4, 2, 0}); // Y^2 -> 2 x^4 y^2

        MultiPoly lhs(3);
        for (const auto& [e, c] : Q.terms()) {
            if (e[1] != 0 && e[1] != 2)
                throw std::logic_error("verify_projections: odd power of Y in the quartic");
            MultiPoly term = MultiPoly::constant(3, c);
            if (e[1] == 2) term *= y2;
            if (e[0]) term *= im[0].pow(e[0]);
            if (e[2]) term *= im[2].pow(e[2]);
            if (e[3]) term *= im[3].pow(e[3]);
            lhs += term;
        }

        auto model = x_alternate(p);
        MultiPoly weier(3);  // y^2 - x (x^2 + B(t) x + A(t))
        weier.add_term({0, 2, 0}, Rational(1));
        weier.add_term({3, 0, 0}, Rational(-1));
        for (int i = 0; i <= model.a2.degree(); ++i)
            weier.add_term({2, 0, i}, -model.a2.coeff(i));
        for (int i = 0; i <= model.a4.degree(); ++i)
            weier.add_term({1, 0, i}, -model.a4.coeff(i));
        // 8 x^9 (zeta - eps t)
        MultiPoly factor = MultiPoly::monomial(3, Rational(8) * p.zeta, {9, 0, 0});
        factor.add_term({9, 0, 1}, Rational(-8) * p.epsilon);
        rep.alternate_ok = lhs == weier * factor;
    }
    return rep;
}

}  // namespace sixlines
