#include <doctest.h>

#include <random>

#include "sixlines/fibration.hpp"
#include "sixlines/quartic.hpp"

using namespace sixlines;

namespace {
RatPoly P(std::vector<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return RatPoly(std::move(v));
}
using M = std::map<std::string, int>;
}  // namespace

TEST_CASE("kodaira type table") {
    CHECK(KodairaType{KodairaType::In, 2}.euler() == 2);
    CHECK(KodairaType{KodairaType::InStar, 0}.euler() == 6);
    CHECK(KodairaType{KodairaType::InStar, 8}.euler() == 14);
    CHECK(KodairaType{KodairaType::IIStar, 0}.euler() == 10);
    CHECK(KodairaType{KodairaType::IIIStar, 0}.name() == "III*");
    CHECK(kodaira_type_from_name("I12*").value() == KodairaType{KodairaType::InStar, 12});
    CHECK(kodaira_type_from_name("I1").value() == KodairaType{KodairaType::In, 1});
    CHECK_FALSE(kodaira_type_from_name("I0").has_value());
    CHECK_FALSE(kodaira_type_from_name("V").has_value());
}

TEST_CASE("natural fibration at the golden point") {
    auto model = natural_fibration(Rational(2), Rational(3), Rational(4), Rational(5));
    // 2(mu - nu) = (2u+3)(3u+4), 2(mu + nu) = (4u+5)(u+2)
    RatPoly p1 = P({3, 2}) * P({4, 3});
    RatPoly p2 = P({5, 4}) * P({2, 1});
    RatPoly u = RatPoly::x();
    CHECK(model.a2 == -(u * p1 + u * p2));
    CHECK(model.a4 == u * p1 * u * p2);
    CHECK(model.a6.is_zero());

    // shared roots of f and Delta at the I0* loci
    CHECK(poly_gcd(model.short_f(), model.disc()).degree() > 0);

    // (2,3,4,5) sits on the Disc(S) = 0 locus, so one pair of I2 merges
    auto rep = kodaira_classify(model);
    CHECK(rep.euler_sum == 24);
    CHECK(rep.multiset() == M{{"I2", 4}, {"I4", 1}, {"I0*", 2}});
    CHECK(rep.two_torsion_order == 4);
}

TEST_CASE("natural fibration generic pattern and discriminant identity") {
    const Rational a(2), b(3), c(5), d(8);
    auto model = natural_fibration(a, b, c, d);
    auto rep = kodaira_classify(model);
    CHECK(rep.multiset() == M{{"I2", 6}, {"I0*", 2}});
    CHECK(rep.euler_sum == 24);
    CHECK(rep.two_torsion_order == 4);

    // Delta = 2^12 u^6 nu^2 (mu^2 - nu^2)^2 with 4 nu = P2 - P1, 4 mu = P1 + P2
    RatPoly p1 = P({3, 2}) * P({7, 4});   // (au+b)((c-1)u+(d-1))
    RatPoly p2 = P({8, 5}) * P({2, 1});   // (cu+d)((a-1)u+(b-1))
    RatPoly nu = (p2 - p1) * Rational(1, 4);
    RatPoly mu = (p1 + p2) * Rational(1, 4);
    RatPoly u6 = RatPoly::monomial(6, Rational(1));
    RatPoly closed = Rational(4096) * u6 * nu * nu * (mu * mu - nu * nu).pow(2);
    CHECK(model.disc() == closed);

    // case (6) moduli are rejected
    CHECK_THROWS_AS(natural_fibration(Rational(1), Rational(1), Rational(1), Rational(1)),
                    std::invalid_argument);
}

TEST_CASE("natural base-fiber dual") {
    auto model = natural_bfdual(Rational(2), Rational(3), Rational(5), Rational(8));
    auto rep = kodaira_classify(model);
    CHECK(rep.multiset() == M{{"I1", 12}, {"I4", 1}, {"I8", 1}});
    CHECK(rep.euler_sum == 24);
    CHECK(rep.two_torsion_order == 1);
}

TEST_CASE("y alternate fibration") {
    JInvariants j = j_invariants_of(from_moduli(Rational(2), Rational(3), Rational(5),
                                                Rational(8)));
    auto model = y_alternate(j);
    // Delta = 16 A (B^2 - 4A)^2 up to the standard factor
    SatakeSextic sx = satake_sextic(j);
    CHECK(model.disc() == Rational(16) * Rational(16) * sx.a * (sx.s * sx.s));

    auto rep = kodaira_classify(model);
    CHECK(rep.multiset() == M{{"I2", 6}, {"I1", 2}, {"I4*", 1}});
    CHECK(rep.euler_sum == 24);
    CHECK(rep.two_torsion_order == 2);

    // I2 places are the roots of S, I1 places the roots of A
    for (const auto& f : rep.fibers) {
        if (!f.place) continue;
        if (f.type.name() == "I2") CHECK(f.place->divides(sx.s));
        if (f.type.name() == "I1") CHECK(f.place->divides(sx.a));
    }

    JInvariants invalid{Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)};
    CHECK_THROWS_AS(y_alternate(invalid), std::invalid_argument);
}

TEST_CASE("y alternate at the golden point shows the double merge") {
    // (2,3,4,5) sits on two components of Disc(S) = 0, so two pairs of I2 fuse
    JInvariants j{Rational(63), Rational(-243), Rational(729), Rational(-8748),
                  Rational(-32076)};
    auto rep = kodaira_classify(y_alternate(j));
    CHECK(rep.multiset() == M{{"I4", 2}, {"I2", 2}, {"I1", 2}, {"I4*", 1}});
    CHECK(rep.euler_sum == 24);
    CHECK(rep.two_torsion_order == 2);
}

TEST_CASE("squarefree structure of the y-alternate discriminant") {
    // at the golden point S itself has two double roots (Disc(S) = 0), giving the
    // decomposition {A: 1, (t-15)(t-3): 2, (t+15)(t-6): 4}
    JInvariants j{Rational(63), Rational(-243), Rational(729), Rational(-8748),
                  Rational(-32076)};
    auto dec = squarefree_decompose(y_alternate(j).disc());
    REQUIRE(dec.size() == 3);
    CHECK(dec[0] == std::pair{P({-44, 12, 1}), 1});   // monic A
    CHECK(dec[1] == std::pair{P({45, -18, 1}), 2});
    CHECK(dec[2] == std::pair{P({-90, 9, 1}), 4});

    // at a generic point the pattern is A with multiplicity 1, S with multiplicity 2
    JInvariants jg = j_invariants_of(from_moduli(Rational(2), Rational(3), Rational(5),
                                                 Rational(8)));
    SatakeSextic sx = satake_sextic(jg);
    auto dg = squarefree_decompose(y_alternate(jg).disc());
    REQUIRE(dg.size() == 2);
    CHECK(dg[0] == std::pair{sx.a.monic(), 1});
    CHECK(dg[1] == std::pair{sx.s.monic(), 2});
}

TEST_CASE("x models at a rational parameter point") {
    SexticParams<Rational> p{Rational(2), Rational(3), Rational(5), Rational(7), Rational(11),
                             Rational(13)};

    auto std_model = x_standard(p);
    CHECK(std_model.a4 == RatPoly::monomial(3, Rational(4)) * P({11, -6, 5}));
    CHECK(std_model.a6 == RatPoly::monomial(5, Rational(-8)) * P({13, 6, 7}));
    auto std_rep = kodaira_classify(std_model);
    CHECK(std_rep.multiset() == M{{"III*", 2}, {"I1", 6}});
    CHECK(std_rep.euler_sum == 24);
    CHECK(std_rep.two_torsion_order == 1);

    // 4 f^3 + 27 g^2 = 64 s^9 P(s) with the displayed sextic P
    {
        const Rational &al = p.alpha, &be = p.beta, &ga = p.gamma, &de = p.delta,
                       &ep = p.epsilon, &ze = p.zeta;
        RatPoly Ps(std::vector<Rational>{
            Rational(4) * ep.pow(3),
            Rational(-9) * (Rational(4) * al * ep * ep - Rational(3) * ze * ze),
            Rational(12) * (Rational(9) * al * al * ep + Rational(9) * be * ze + ga * ep * ep),
            Rational(-18) * (Rational(6) * al.pow(3) + Rational(4) * al * ga * ep -
                             Rational(6) * be * be - Rational(3) * de * ze),
            Rational(12) * (Rational(9) * al * al * ga + Rational(9) * be * de + ga * ga * ep),
            Rational(-9) * (Rational(4) * al * ga * ga - Rational(3) * de * de),
            Rational(4) * ga.pow(3)});
        RatPoly f = std_model.short_f(), g = std_model.short_g();
        CHECK(Rational(4) * f * f * f + Rational(27) * g * g ==
              Rational(64) * RatPoly::monomial(9, Rational(1)) * Ps);
    }

    auto alt_model = x_alternate(p);
    CHECK(alt_model.a4 == P({-7, 5}) * P({-13, 11}));
    CHECK(alt_model.a2 == P({-6, -6, 0, 1}));
    CHECK(alt_model.disc() ==
          Rational(16) * alt_model.a4 * alt_model.a4 *
              (alt_model.a2 * alt_model.a2 - Rational(4) * alt_model.a4));
    auto alt_rep = kodaira_classify(alt_model);
    CHECK(alt_rep.multiset() == M{{"I8*", 1}, {"I2", 2}, {"I1", 6}});
    CHECK(alt_rep.two_torsion_order == 2);
    CHECK(alt_rep.euler_sum == 24);

    auto dual_rep = kodaira_classify(x_alternate_bfdual(p));
    CHECK(dual_rep.multiset() == M{{"II*", 1}, {"I2*", 1}, {"I1", 6}});
    CHECK(dual_rep.euler_sum == 24);
    CHECK(dual_rep.two_torsion_order == 1);

    // polarization preconditions
    SexticParams<Rational> bad1{Rational(1), Rational(1), Rational(0), Rational(0), Rational(1),
                                Rational(1)};
    CHECK_THROWS_AS(x_standard(bad1), std::invalid_argument);
    SexticParams<Rational> bad2{Rational(1), Rational(1), Rational(1), Rational(1), Rational(0),
                                Rational(0)};
    CHECK_THROWS_AS(x_alternate(bad2), std::invalid_argument);
}

TEST_CASE("x alternate at infinity: order pattern (2,3,14)") {
    SexticParams<Rational> p{Rational(2), Rational(3), Rational(5), Rational(7), Rational(11),
                             Rational(13)};
    auto m = x_alternate(p);
    CHECK(m.short_f().reciprocal(8).ord_at_zero() == 2);
    CHECK(m.short_g().reciprocal(12).ord_at_zero() == 3);
    CHECK(m.disc().reciprocal(24).ord_at_zero() == 14);

    // the standard model's a4 has degree 5, so its reciprocal vanishes to order 3
    auto ms = x_standard(p);
    CHECK(ms.a4.degree() == 5);
    CHECK(ms.a4.reciprocal(8).ord_at_zero() == 3);
}

TEST_CASE("short-form conversion preserves the classification") {
    SexticParams<Rational> p{Rational(2), Rational(3), Rational(5), Rational(7), Rational(11),
                             Rational(13)};
    auto m = x_alternate(p);
    WeierstrassModel<Rational> shortened{RatPoly(), m.short_f(), m.short_g(), m.label};
    auto a = kodaira_classify(m), b = kodaira_classify(shortened);
    CHECK(a.multiset() == b.multiset());
    CHECK(a.euler_sum == b.euler_sum);
    CHECK(a.two_torsion_order == b.two_torsion_order);
    CHECK(shortened.disc() == m.disc());
}

TEST_CASE("classification over a quadratic extension") {
    // golden parameters over Q(sqrt 5); (2,3,4,5) sits on two components of
    // Disc(S) = 0 at once, so two I1 pairs merge
    JInvariants j{Rational(63), Rational(-243), Rational(729), Rational(-8748),
                  Rational(-32076)};
    auto solved = solve_params(j);
    auto& pe = std::get<SexticParams<QuadExt>>(solved);

    auto rep = kodaira_classify(x_alternate(pe));
    CHECK(rep.euler_sum == 24);
    CHECK(rep.two_torsion_order == 2);
    CHECK(rep.multiset() == M{{"I8*", 1}, {"I2", 4}, {"I1", 2}});

    auto rep_dual = kodaira_classify(x_alternate_bfdual(pe));
    CHECK(rep_dual.euler_sum == 24);
    CHECK(rep_dual.multiset() == M{{"II*", 1}, {"I2*", 1}, {"I2", 2}, {"I1", 2}});

    // at the golden point the multiplicity-2 class of Delta is A times the
    // double part of S, so the refinement keeps them together; the place orders
    // stay uniform and the counts above remain correct
    auto model = x_alternate(pe);
    ExtPoly A = model.a4, B = model.a2;
    ExtPoly S = B * B - A * QuadExt(Rational(4));
    auto dec = squarefree_decompose(model.disc());
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].second == 1);
    CHECK(dec[1].second == 2);
    CHECK(dec[1].first.degree() == 4);
    CHECK(A.monic().divides(dec[1].first));
    CHECK(dec[0].first.divides(S));
}

TEST_CASE("gcd-free basis separates A-roots from S-roots at generic parameters") {
    SexticParams<Rational> p{Rational(2), Rational(3), Rational(5), Rational(7), Rational(11),
                             Rational(13)};
    auto model = x_alternate(p);
    RatPoly A = model.a4, B = model.a2;
    RatPoly S = B * B - A * Rational(4);
    std::vector<RatPoly> parts;
    for (const auto& [f, m] : squarefree_decompose(model.disc())) parts.push_back(f);
    auto basis = gcd_free_basis(parts);
    for (const auto& b : basis) {
        bool in_a = b.divides(A), in_s = b.divides(S);
        CHECK(in_a != in_s);
    }
}

TEST_CASE("classification over an imaginary quadratic extension") {
    // parameters over Q(sqrt(-3)); exercises the torsion exclusion at a prime
    // where -3 is a residue
    QuadExt r3(Rational(0), Rational(1), -3);
    SexticParams<QuadExt> p{QuadExt(Rational(1)), QuadExt(Rational(2)), r3,
                            QuadExt(Rational(1)), QuadExt(Rational(1)),
                            QuadExt(Rational(2), Rational(1), -3)};
    auto rep = kodaira_classify(x_standard(p));
    CHECK(rep.euler_sum == 24);
    CHECK(rep.two_torsion_order == 1);
    auto rep2 = kodaira_classify(x_alternate_bfdual(p));
    CHECK(rep2.euler_sum == 24);
    CHECK(rep2.two_torsion_order == 1);

    // a radicand larger than every probe prime still resolves
    JInvariants j{Rational(1), Rational(1), Rational(1), Rational(0), Rational(-100003, 4)};
    auto solved = solve_params(j);
    auto& pe = std::get<SexticParams<QuadExt>>(solved);
    CHECK(pe.zeta.radicand() == 100003);
    auto rep3 = kodaira_classify(x_standard(pe));
    CHECK(rep3.euler_sum == 24);
    CHECK(rep3.two_torsion_order == 1);
}

TEST_CASE("non-minimal place is an error") {
    // y^2 = x^3 + t^4 x + t^6 is non-minimal at t = 0
    WeierstrassModel<Rational> m{RatPoly(), RatPoly::monomial(4, Rational(1)),
                                 RatPoly::monomial(6, Rational(1)), FibrationLabel::XStandard};
    CHECK_THROWS_AS(kodaira_classify(m), std::domain_error);
}

TEST_CASE("expected fiber predictions") {
    ConfluenceFlags generic;
    CHECK(expected_fibers(FibrationLabel::XAlternate, generic).value() ==
          M{{"I8*", 1}, {"I2", 2}, {"I1", 6}});
    ConfluenceFlags da;
    da.generic = false;
    da.disc_a_zero = true;
    CHECK(expected_fibers(FibrationLabel::XAlternate, da).value() ==
          M{{"I8*", 1}, {"I4", 1}, {"I1", 6}});
    ConfluenceFlags c5;
    c5.generic = false;
    c5.case5 = true;
    CHECK(expected_fibers(FibrationLabel::XStandard, c5).value() == M{{"II*", 2}, {"I1", 4}});
    ConfluenceFlags unknown;
    unknown.generic = false;
    CHECK_FALSE(expected_fibers(FibrationLabel::Natural, unknown).has_value());

    // every prediction sums to Euler number 24
    for (auto label : {FibrationLabel::Natural, FibrationLabel::NaturalDual,
                       FibrationLabel::YAlternate, FibrationLabel::XStandard,
                       FibrationLabel::XAlternate, FibrationLabel::XAlternateDual}) {
        for (int kind = 0; kind < 7; ++kind) {
            ConfluenceFlags fl;
            fl.generic = kind == 0;
            fl.res_ab_zero = kind == 1;
            fl.tangent = kind == 2;
            fl.disc_a_zero = kind == 3;
            fl.disc_s_zero = kind == 4;
            fl.cases34 = kind == 5;
            fl.case5 = kind == 6;
            auto want = expected_fibers(label, fl);
            if (!want) continue;
            int euler = 0;
            for (const auto& [name, count] : *want)
                euler += kodaira_type_from_name(name).value().euler() * count;
            CHECK(euler == 24);
        }
    }
}

TEST_CASE("torsion detection on a split cubic with nonzero a6") {
    // y^2 = (x - t^4)(x - t + t^4)(x + t): a K3 model whose RHS cubic has three
    // polynomial roots but no x factor, exercising the interpolation search
    RatPoly t = RatPoly::x();
    RatPoly e1 = RatPoly::monomial(4, Rational(1));
    RatPoly e2 = t - e1;
    RatPoly e3 = -t;
    WeierstrassModel<Rational> m{-(e1 + e2 + e3), e1 * e2 + e1 * e3 + e2 * e3,
                                 -(e1 * e2 * e3), FibrationLabel::XStandard};
    CHECK_FALSE(m.a6.is_zero());
    auto rep = kodaira_classify(m);
    CHECK(rep.two_torsion_order == 4);
    CHECK(rep.euler_sum == 24);

    // shifting one root off the polynomial lattice kills the extra sections
    WeierstrassModel<Rational> m2{m.a2, m.a4, m.a6 + RatPoly(Rational(1)),
                                  FibrationLabel::XStandard};
    auto rep2 = kodaira_classify(m2);
    CHECK(rep2.two_torsion_order == 1);
}
