#include <doctest.h>

#include <random>

#include "sixlines/isogeny.hpp"
#include "sixlines/quartic.hpp"

using namespace sixlines;

namespace {
Rational rnd(std::mt19937_64& rng, long bound = 9) {
    std::uniform_int_distribution<long> num(-bound, bound), den(1, 4);
    return Rational(num(rng), den(rng));
}
Rational rnd_nz(std::mt19937_64& rng, long bound = 9) {
    Rational r;
    std::uniform_int_distribution<long> num(-bound, bound), den(1, 4);
    do { r = Rational(num(rng), den(rng)); } while (r.is_zero());
    return r;
}
}  // namespace

TEST_CASE("symbolic isogeny certificate") {
    IsogenyCertificate cert = verify_isogeny_symbolic();
    CHECK(cert.involution_x_on_model);
    CHECK(cert.involution_x_involutive);
    CHECK(cert.involution_x_fixed_locus);
    CHECK(cert.phi_hat_image_on_y_model);
    CHECK(cert.phi_hat_invariant_under_involution);
    CHECK(cert.involution_y_on_model);
    CHECK(cert.involution_y_involutive);
    CHECK(cert.phi_image_on_x_model);
    CHECK(cert.phi_invariant_under_involution_y);
    CHECK(cert.phi_after_phi_hat_is_doubling);
    CHECK(cert.phi_hat_after_phi_is_doubling);
    CHECK(cert.all_ok());
}

TEST_CASE("pointwise maps on constructed rational points") {
    std::mt19937_64 rng(83);
    for (int i = 0; i < 40; ++i) {
        // choose B, t, x, y and solve for A so the point lies on the fiber
        RatPoly B(std::vector<Rational>{rnd(rng), rnd(rng), Rational(0), Rational(1)});
        Rational t = rnd(rng);
        Rational x = rnd_nz(rng), y = rnd(rng);
        Rational a_val = (y * y - x * x * x - B(t) * x * x) / x;
        RatPoly A(a_val);  // constant A with the prescribed fiber value

        FiberPoint<Rational> p{t, std::make_pair(x, y)};
        REQUIRE(on_x_model(A, B, p));

        // involution lands on the model and is involutive
        auto ip = vgs_involution_x(A, B, p);
        CHECK(on_x_model(A, B, ip));
        if (!ip.at_infinity()) {
            auto ipp = vgs_involution_x(A, B, ip);
            REQUIRE_FALSE(ipp.at_infinity());
            CHECK(ipp.xy->first == x);
            CHECK(ipp.xy->second == y);
        }

        // the quotient map lands on the partner model
        auto q = isogeny_phi_hat(A, B, p);
        CHECK(on_y_model(A, B, q));
        // invariance under the involution
        if (!ip.at_infinity() && !ip.xy->first.is_zero()) {
            auto q2 = isogeny_phi_hat(A, B, ip);
            REQUIRE_FALSE(q2.at_infinity());
            CHECK(q2.xy == q.xy);
        }
        // the dual map returns to the original model
        if (!q.at_infinity() && !q.xy->first.is_zero()) {
            auto back = isogeny_phi(A, B, q);
            CHECK(on_x_model(A, B, back));
        }
    }
}

TEST_CASE("exceptional points follow the section-swap convention") {
    RatPoly A(Rational(6)), B(std::vector<Rational>{Rational(-2), Rational(0), Rational(0),
                                                    Rational(1)});
    Rational t(1);
    auto inf = FiberPoint<Rational>::infinity(t);
    auto tau = vgs_involution_x(A, B, inf);
    REQUIRE_FALSE(tau.at_infinity());
    CHECK(tau.xy->first.is_zero());
    CHECK(tau.xy->second.is_zero());
    auto back = vgs_involution_x(A, B, tau);
    CHECK(back.at_infinity());

    // two-torsion maps to the section at infinity under the quotient
    CHECK(isogeny_phi_hat(A, B, tau).at_infinity());
    FiberPoint<Rational> T{t, std::make_pair(Rational(0), Rational(0))};
    CHECK(isogeny_phi(A, B, T).at_infinity());

    // a point with x = 0 and y != 0 is not on the model
    FiberPoint<Rational> off{t, std::make_pair(Rational(0), Rational(1))};
    CHECK_FALSE(on_x_model(A, B, off));
    CHECK_THROWS_AS(vgs_involution_x(A, B, off), std::invalid_argument);
}

TEST_CASE("fixed points of the involution satisfy x^2 = A") {
    // pick A a perfect square at t so x = sqrt(A) is rational
    RatPoly A(Rational(9));
    RatPoly B(std::vector<Rational>{Rational(2), Rational(1)});
    Rational t(2);
    Rational x(3);  // x^2 = A(t)
    // y^2 = x (x^2 + B x + A) may not be a rational square; use the symbolic
    // certificate for the general statement and check the x-coordinate here
    auto a_val = A(t);
    CHECK(x * x == a_val);
    // the involution formula fixes x whenever x^2 = A
    CHECK(a_val / x == x);
}

TEST_CASE("moduli match and solved parameters") {
    // example: epsilon = 0, zeta = 1 gives the point [a : b : 0 : gamma : delta]
    SexticParams<Rational> p{Rational(2), Rational(3), Rational(5), Rational(7), Rational(0),
                             Rational(1)};
    auto w = moduli_match(p);
    CHECK(w.coords == std::vector<Rational>{Rational(2), Rational(3), Rational(0), Rational(5),
                                            Rational(7)});

    // zeta root construction: gamma*zeta + delta*epsilon collapses to J5
    std::mt19937_64 rng(89);
    for (int i = 0; i < 50; ++i) {
        JInvariants j{rnd(rng), rnd(rng), rnd(rng), rnd(rng), rnd(rng)};
        if (!j.valid() || (j.j4.is_zero() && j.j5.is_zero() && j.j6.is_zero())) continue;
        auto solved = solve_params(j);
        if (auto* pr = std::get_if<SexticParams<Rational>>(&solved)) {
            CHECK(weighted_equal(moduli_match(*pr), j.as_weighted_point()));
        } else {
            auto& pe = std::get<SexticParams<QuadExt>>(solved);
            CHECK(weighted_equal(moduli_match(pe), promote(j.as_weighted_point())));
        }
    }

    // golden quadratic case
    JInvariants jg{Rational(63), Rational(-243), Rational(729), Rational(-8748),
                   Rational(-32076)};
    auto solved = solve_params(jg);
    auto& pe = std::get<SexticParams<QuadExt>>(solved);
    CHECK(pe.zeta == QuadExt(Rational(-6), Rational(4), 5));
    CHECK(pe.delta == QuadExt(Rational(-4374), Rational(-2916), 5));
    CHECK(pe.delta * pe.zeta == QuadExt(Rational(-32076)));

    // rejected inputs
    JInvariants invalid{Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)};
    CHECK_THROWS_AS(solve_params(invalid), std::invalid_argument);
    JInvariants no_polarization{Rational(1), Rational(2), Rational(0), Rational(0), Rational(0)};
    CHECK_THROWS_AS(solve_params(no_polarization), std::invalid_argument);
}

TEST_CASE("y model of the solved parameters matches the configuration route") {
    // A(t) and B(t) of the X model push forward to the alternate model of the
    // double sextic, coefficient for coefficient
    JInvariants j = j_invariants_of(from_moduli(Rational(2), Rational(3), Rational(5),
                                                Rational(8)));
    auto solved = solve_params(j);
    auto model_y = y_alternate(j);
    if (auto* pr = std::get_if<SexticParams<Rational>>(&solved)) {
        auto mx = x_alternate(*pr);
        RatPoly B = mx.a2, A = mx.a4;
        CHECK(model_y.a2 == B * Rational(-2));
        CHECK(model_y.a4 == B * B - A * Rational(4));
    } else {
        auto& pe = std::get<SexticParams<QuadExt>>(solved);
        auto mx = x_alternate(pe);
        ExtPoly B = mx.a2, A = mx.a4;
        ExtPoly yb = B * QuadExt(Rational(-2));
        ExtPoly ya = B * B - A * QuadExt(Rational(4));
        // compare after projecting the rational model into the extension
        for (int i = 0; i <= std::max(yb.degree(), model_y.a2.degree()); ++i)
            CHECK(yb.coeff(i) == QuadExt(model_y.a2.coeff(i)));
        for (int i = 0; i <= std::max(ya.degree(), model_y.a4.degree()); ++i)
            CHECK(ya.coeff(i) == QuadExt(model_y.a4.coeff(i)));
    }
}

TEST_CASE("quartic polynomial structure") {
    SexticParams<Rational> zero{Rational(0), Rational(0), Rational(0), Rational(0), Rational(0),
                                Rational(0)};
    MultiPoly q0 = quartic_poly(zero);
    CHECK(q0.term_count() == 2);  // Y^2 Z W - 4 X^3 Z
    MultiPoly expect(4);
    expect.add_term({0, 2, 1, 1}, Rational(1));
    expect.add_term({3, 0, 1, 0}, Rational(-4));
    CHECK(q0 == expect);

    // homogeneity of degree 4
    std::mt19937_64 rng(97);
    SexticParams<Rational> p{rnd(rng), rnd(rng), rnd(rng), rnd(rng), rnd(rng), rnd(rng)};
    MultiPoly qp = quartic_poly(p);
    for (const auto& [e, c] : qp.terms())
        CHECK(e[0] + e[1] + e[2] + e[3] == 4);

    // (0,0,1,0,1,0): only the gamma and epsilon monomials among parameter terms
    SexticParams<Rational> ge{Rational(0), Rational(0), Rational(1), Rational(0), Rational(1),
                              Rational(0)};
    MultiPoly qge = quartic_poly(ge);
    MultiPoly diff = qge - q0;
    MultiPoly expect_param(4);
    expect_param.add_term({1, 0, 2, 1}, Rational(1));  // gamma X Z^2 W
    expect_param.add_term({1, 0, 0, 3}, Rational(1));  // epsilon X W^3
    CHECK(diff == expect_param);
}

TEST_CASE("quartic symmetries and projections at sample points") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 8; ++i) {
        SexticParams<Rational> p{rnd(rng), rnd(rng), rnd_nz(rng), rnd_nz(rng), rnd_nz(rng),
                                 rnd_nz(rng)};
        if (i == 5) p.epsilon = Rational(0);
        if (i == 6) p.gamma = Rational(0);
        Rational t = rnd_nz(rng);
        auto sym = verify_symmetries(p, t);
        CHECK(sym.scaling_ok);
        CHECK(sym.swap_ok);
        CHECK(sym.isom_fixes_moduli);
        auto proj = verify_projections(p);
        CHECK(proj.standard_ok);
        CHECK(proj.alternate_ok);
    }
    // t = 1 trivial case
    SexticParams<Rational> p{Rational(1), Rational(2), Rational(3), Rational(4), Rational(5),
                             Rational(6)};
    CHECK(verify_symmetries(p, Rational(1)).all_ok());
    CHECK_THROWS_AS(verify_symmetries(p, Rational(0)), std::invalid_argument);
}
