#include "sixlines/verification.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "sixlines/configuration.hpp"
#include "sixlines/fibration.hpp"
#include "sixlines/genus_two.hpp"
#include "sixlines/invariants.hpp"
#include "sixlines/isogeny.hpp"
#include "sixlines/quartic.hpp"

namespace sixlines::verify {

namespace {

Rational rand_rational(std::mt19937_64& rng, long num_bound = 20, long den_bound = 6) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    return Rational(num(rng), den(rng));
}

Rational rand_nonzero(std::mt19937_64& rng, long num_bound = 20, long den_bound = 6) {
    Rational r;
    do {
        r = rand_rational(rng, num_bound, den_bound);
    } while (r.is_zero());
    return r;
}

std::array<Rational, 4> rand_generic_moduli(std::mt19937_64& rng) {
    while (true) {
        std::array<Rational, 4> m{rand_rational(rng), rand_rational(rng), rand_rational(rng),
                                  rand_rational(rng)};
        Configuration c = from_moduli(m[0], m[1], m[2], m[3]);
        DOCoordinates d = do_coordinates(c);
        bool ok = !d.r.is_zero();
        for (const auto& t : d.t) ok = ok && !t.is_zero();
        if (!ok) continue;
        JInvariants j = j_invariants(satake_from_t(d.t));
        DerivedInvariants dv = derived_invariants(j);
        if (j.j4.is_zero() || dv.disc_a.is_zero() || dv.disc_s.is_zero() || dv.res_ab.is_zero())
            continue;
        return m;
    }
}

std::string fibers_str(const std::map<std::string, int>& m) {
    std::string out;
    for (const auto& [k, v] : m) out += (out.empty() ? "" : " + ") + std::to_string(v) + "x" + k;
    return out;
}

std::array<MultiPoly, 5> j_t_route_symbolic() {
    return j_from_power_sums_generic(
        power_sums_generic(satake_from_t_generic(symbolic_t_closed().t)));
}

JInvariants j_of_moduli(const Rational& a, const Rational& b, const Rational& c,
                        const Rational& d) {
    return j_invariants_of(from_moduli(a, b, c, d));
}

}  // namespace

std::vector<CheckResult> plucker_relations_symbolic() {
    // the fifteen linear relations hold identically for the determinant route
    static constexpr int kRel[15][4][2] = {
        {{1, 1}, {-1, 2}, {-1, 5}, {-1, 9}},  {{1, 1}, {-1, 2}, {-1, 6}, {-1, 7}},
        {{1, 1}, {-1, 3}, {-1, 5}, {-1, 10}}, {{1, 1}, {-1, 3}, {-1, 6}, {-1, 8}},
        {{1, 1}, {-1, 4}, {-1, 7}, {-1, 10}}, {{1, 1}, {-1, 4}, {-1, 8}, {-1, 9}},
        {{1, 2}, {-1, 3}, {1, 7}, {-1, 8}},   {{1, 2}, {-1, 3}, {1, 9}, {-1, 10}},
        {{1, 2}, {-1, 4}, {1, 5}, {-1, 8}},   {{1, 2}, {-1, 4}, {1, 6}, {-1, 10}},
        {{1, 3}, {-1, 4}, {1, 5}, {-1, 7}},   {{1, 3}, {-1, 4}, {1, 6}, {-1, 9}},
        {{1, 5}, {-1, 6}, {-1, 7}, {1, 9}},   {{1, 5}, {-1, 6}, {-1, 8}, {1, 10}},
        {{1, 7}, {-1, 8}, {-1, 9}, {1, 10}},
    };
    SymbolicCoordinates det = symbolic_t_determinant();
    SymbolicCoordinates closed = symbolic_t_closed();
    std::vector<CheckResult> out;
    bool closed_match = det.r == closed.r;
    for (int i = 0; i < 10; ++i) closed_match = closed_match && det.t[i] == closed.t[i];
    out.push_back({"t-coordinates: determinant route equals closed forms", closed_match, ""});
    for (int n = 0; n < 15; ++n) {
        MultiPoly acc(4);
        for (const auto& [s, idx] : kRel[n])
            acc += det.t[idx - 1] * Rational(s);
        out.push_back({"linear relation " + std::to_string(n + 1), acc.is_zero(), ""});
    }
    return out;
}

CheckResult r_closed_form_symbolic() {
    SymbolicCoordinates det = symbolic_t_determinant();
    SymbolicCoordinates closed = symbolic_t_closed();
    return {"degree-two coordinate: determinant route equals closed form", det.r == closed.r, ""};
}

CheckResult r_squared_identity_symbolic() {
    SymbolicCoordinates det = symbolic_t_determinant();
    MultiPoly s2(4), s4(4);
    for (const auto& t : det.t) {
        MultiPoly q = t * t;
        s2 += q;
        s4 += q * q;
    }
    MultiPoly lhs = det.r * det.r * Rational(12);
    MultiPoly rhs = s2 * s2 - s4 * Rational(4);
    return {"12 R^2 = (sum t^2)^2 - 4 sum t^4", lhs == rhs, ""};
}

CheckResult r_squared_j4_symbolic() {
    SymbolicCoordinates det = symbolic_t_determinant();
    auto j = j_t_route_symbolic();
    MultiPoly lhs = det.r * det.r * Rational(81);
    MultiPoly rhs = j[2] * Rational(16);
    return {"81 R^2 = 16 J4", lhs == rhs, ""};
}

CheckResult disc_a_product_symbolic() {
    auto j = j_t_route_symbolic();
    SymbolicCoordinates closed = symbolic_t_closed();
    MultiPoly lhs = (j[3] * j[3] - j[2] * j[4] * Rational(4)) * Rational(16);
    MultiPoly rhs = MultiPoly::constant(4, Rational(3).pow(10));
    for (const auto& t : closed.t) rhs *= t;
    return {"16 (J5^2 - 4 J4 J6) = 3^10 prod t_i", lhs == rhs, ""};
}

std::vector<CheckResult> appendix_identity(int samples, std::uint64_t seed) {
    std::vector<CheckResult> out;
    auto jt = j_t_route_symbolic();
    auto jq = j_closed_form_symbolic();
    for (int k = 0; k < 3; ++k)
        out.push_back({"closed-form coefficient J" + std::to_string(k + 2) +
                           " equals the t-route (symbolic)",
                       jt[k] == jq[k], ""});
    std::mt19937_64 rng(seed);
    bool ok5 = true, ok6 = true;
    for (int i = 0; i < samples; ++i) {
        Rational a = rand_rational(rng), b = rand_rational(rng), c = rand_rational(rng),
                 d = rand_rational(rng);
        JInvariants t_route = j_of_moduli(a, b, c, d);
        JInvariants closed = j_invariants_closed_form(a, b, c, d);
        ok5 = ok5 && t_route.j5 == closed.j5;
        ok6 = ok6 && t_route.j6 == closed.j6;
    }
    out.push_back({"closed-form coefficient J5 equals the t-route (" + std::to_string(samples) +
                       " points)",
                   ok5, ""});
    out.push_back({"closed-form coefficient J6 equals the t-route (" + std::to_string(samples) +
                       " points)",
                   ok6, ""});
    return out;
}

CheckResult disc_s_factorization(int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Rational three30 = Rational(3).pow(30);
    for (int i = 0; i < samples; ++i) {
        Rational a = rand_rational(rng), b = rand_rational(rng), c = rand_rational(rng),
                 d = rand_rational(rng);
        DOCoordinates dc = do_coordinates(from_moduli(a, b, c, d));
        JInvariants j = j_invariants(satake_from_t(dc.t));
        Rational disc_s = derived_invariants(j).disc_s;
        Rational prod = three30;
        const auto& t = dc.t;
        for (int k = 1; k < 10; ++k) {
            Rational df = t[0] - t[k];
            prod *= df * df;
        }
        for (auto [i1, i2] : {std::pair{2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}, {4, 6}}) {
            Rational df = t[i1 - 1] - t[i2 - 1];
            prod *= df * df;
        }
        if (disc_s != prod)
            return {"Disc(S) factors into the fifteen squared t-differences", false,
                    "mismatch at sample " + std::to_string(i)};
    }
    return {"Disc(S) factors into the fifteen squared t-differences (" +
                std::to_string(samples) + " random moduli)",
            true, ""};
}

std::vector<CheckResult> golden_example() {
    std::vector<CheckResult> out;
    const Rational a(2), b(3), c(4), d(5);
    Configuration cfg = from_moduli(a, b, c, d);
    DOCoordinates dc = do_coordinates(cfg);
    const std::array<long, 10> t_expect{8, 1, 1, 8, 9, 5, 2, 2, -2, -2};
    bool t_ok = true;
    for (int i = 0; i < 10; ++i) t_ok = t_ok && dc.t[i] == Rational(t_expect[i]);
    out.push_back({"golden t-vector via determinants", t_ok, ""});
    out.push_back({"golden R = -12", dc.r == Rational(-12), ""});

    // closed-form route agrees
    SymbolicCoordinates closed = symbolic_t_closed();
    std::vector<Rational> pt{a, b, c, d};
    bool closed_ok = closed.r.eval(pt) == dc.r;
    for (int i = 0; i < 10; ++i) closed_ok = closed_ok && closed.t[i].eval(pt) == dc.t[i];
    out.push_back({"golden t-vector via closed forms", closed_ok, ""});

    SatakeCoordinates x = satake_from_t(dc.t);
    const std::array<long, 6> x_expect{15, -15, 6, 6, -15, 3};
    bool x_ok = true;
    for (int i = 0; i < 6; ++i) x_ok = x_ok && x.x[i] == Rational(x_expect[i]);
    out.push_back({"golden Satake coordinates (15,-15,6,6,-15,3)", x_ok, ""});

    JInvariants j = j_invariants(x);
    bool j_ok = j.j2 == Rational(63) && j.j3 == Rational(-243) && j.j4 == Rational(729) &&
                j.j5 == Rational(-8748) && j.j6 == Rational(-32076);
    out.push_back({"golden J = (63,-243,729,-8748,-32076)", j_ok, ""});

    JInvariants jc = j_invariants_closed_form(a, b, c, d);
    out.push_back({"golden J via closed forms matches", jc == j, ""});

    DerivedInvariants dv = derived_invariants(j);
    out.push_back({"golden Disc(A) = 170061120 via J5^2 - 4 J4 J6",
                   dv.disc_a == Rational(170061120), ""});
    Rational prod_t(1);
    for (const auto& ti : dc.t) prod_t *= ti;
    out.push_back({"golden Disc(A) equals 2^-4 3^10 prod t_i",
                   dv.disc_a == Rational(59049, 16) * prod_t, ""});
    return out;
}

std::vector<CheckResult> fibration_patterns(int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<CheckResult> out;
    using M = std::map<std::string, int>;

    auto check_model = [&](const std::string& name, const auto& model, const M& expect,
                           int torsion) -> CheckResult {
        auto rep = kodaira_classify(model);
        bool ok = rep.euler_sum == 24 && rep.multiset() == expect &&
                  rep.two_torsion_order == torsion;
        std::string detail = "got " + fibers_str(rep.multiset()) + ", euler " +
                             std::to_string(rep.euler_sum) + ", torsion " +
                             std::to_string(rep.two_torsion_order);
        return {name, ok, ok ? "" : detail};
    };

    bool nat_ok = true, natd_ok = true, yalt_ok = true;
    std::string nat_d, natd_d, yalt_d;
    for (int i = 0; i < samples; ++i) {
        auto m = rand_generic_moduli(rng);
        auto r1 = check_model("natural", natural_fibration(m[0], m[1], m[2], m[3]),
                              M{{"I2", 6}, {"I0*", 2}}, 4);
        if (!r1.passed && nat_ok) { nat_ok = false; nat_d = r1.detail; }
        auto r2 = check_model("natural-dual", natural_bfdual(m[0], m[1], m[2], m[3]),
                              M{{"I1", 12}, {"I4", 1}, {"I8", 1}}, 1);
        if (!r2.passed && natd_ok) { natd_ok = false; natd_d = r2.detail; }
        JInvariants j = j_of_moduli(m[0], m[1], m[2], m[3]);
        auto ymodel = y_alternate(j);
        auto r3 = check_model("y-alt", ymodel, M{{"I2", 6}, {"I1", 2}, {"I4*", 1}}, 2);
        if (!r3.passed && yalt_ok) { yalt_ok = false; yalt_d = r3.detail; }
        // the I2 places are the roots of B^2 - 4A, the I1 places the roots of A
        SatakeSextic sx = satake_sextic(j);
        for (const auto& fb : kodaira_classify(ymodel).fibers) {
            if (!fb.place) continue;
            bool where_expected = fb.type.name() == "I2" ? fb.place->divides(sx.s)
                                                         : fb.place->divides(sx.a);
            if (!where_expected && yalt_ok) {
                yalt_ok = false;
                yalt_d = "fiber at an unexpected place";
            }
        }
    }
    out.push_back({"natural fibration: 6 I2 + 2 I0*, torsion (Z/2)^2", nat_ok, nat_d});
    out.push_back({"natural base-fiber dual: 12 I1 + I4 + I8, trivial torsion", natd_ok, natd_d});
    out.push_back({"Y alternate: 6 I2 + 2 I1 + I4*, torsion Z/2", yalt_ok, yalt_d});

    auto rand_params = [&](bool* generic_ok = nullptr) {
        SexticParams<Rational> p{rand_rational(rng), rand_rational(rng), rand_nonzero(rng),
                                 rand_nonzero(rng), rand_nonzero(rng), rand_nonzero(rng)};
        if (generic_ok) {
            // off every coalescence locus: A, B coprime, A and B^2-4A squarefree,
            // and no extra common root of (f, g) in the standard or dual models
            auto mod = x_alternate(p);
            RatPoly A = mod.a4, B = mod.a2;
            RatPoly S = B * B - A * Rational(4);
            RatPoly fq(std::vector<Rational>{p.epsilon, Rational(-3) * p.alpha, p.gamma});
            RatPoly gq(std::vector<Rational>{p.zeta, Rational(2) * p.beta, p.delta});
            auto dual = x_alternate_bfdual(p);
            RatPoly fd = divmod(dual.a4, RatPoly::monomial(2, Rational(1))).first;
            RatPoly gd = divmod(dual.a6, RatPoly::monomial(3, Rational(1))).first;
            *generic_ok = !resultant(A, B).is_zero() && !discriminant(A).is_zero() &&
                          !discriminant(S).is_zero() && !resultant(fq, gq).is_zero() &&
                          !resultant(fd, gd).is_zero();
        }
        return p;
    };

    bool xstd_ok = true, xalt_ok = true, xdual_ok = true;
    std::string xstd_d, xalt_d, xdual_d;
    for (int i = 0; i < samples; ++i) {
        bool generic = false;
        SexticParams<Rational> p = rand_params(&generic);
        if (!generic) { --i; continue; }
        auto r4 = check_model("x-std", x_standard(p), M{{"III*", 2}, {"I1", 6}}, 1);
        if (!r4.passed && xstd_ok) { xstd_ok = false; xstd_d = r4.detail; }
        auto r5 = check_model("x-alt", x_alternate(p), M{{"I8*", 1}, {"I2", 2}, {"I1", 6}}, 2);
        if (!r5.passed && xalt_ok) { xalt_ok = false; xalt_d = r5.detail; }
        auto r6 = check_model("x-alt-dual", x_alternate_bfdual(p),
                              M{{"II*", 1}, {"I2*", 1}, {"I1", 6}}, 1);
        if (!r6.passed && xdual_ok) { xdual_ok = false; xdual_d = r6.detail; }
    }
    out.push_back({"X standard: 2 III* + 6 I1", xstd_ok, xstd_d});
    out.push_back({"X alternate: I8* + 2 I2 + 6 I1, torsion Z/2", xalt_ok, xalt_d});
    out.push_back({"X alternate dual: II* + I2* + 6 I1", xdual_ok, xdual_d});

    // epsilon = 0 and gamma = 0 promotions to II* in the standard fibration
    {
        SexticParams<Rational> p{Rational(2), Rational(3), Rational(5), Rational(7), Rational(0),
                                 Rational(11)};
        auto rep = kodaira_classify(x_standard(p));
        bool ok = rep.multiset() == M{{"II*", 1}, {"III*", 1}, {"I1", 5}} && rep.euler_sum == 24;
        out.push_back({"X standard, epsilon = 0: II* at s = 0", ok, fibers_str(rep.multiset())});
    }
    {
        SexticParams<Rational> p{Rational(2), Rational(3), Rational(0), Rational(7), Rational(5),
                                 Rational(11)};
        auto rep = kodaira_classify(x_standard(p));
        bool ok = rep.multiset() == M{{"II*", 1}, {"III*", 1}, {"I1", 5}} && rep.euler_sum == 24;
        out.push_back(
            {"X standard, gamma = 0: II* at s = infinity", ok, fibers_str(rep.multiset())});
    }
    return out;
}

std::vector<CheckResult> confluences() {
    std::vector<CheckResult> out;
    auto expect_match = [&](const std::string& name, const auto& model, FibrationLabel label,
                            const ConfluenceFlags& fl, int torsion = -1) {
        auto rep = kodaira_classify(model);
        auto want = expected_fibers(label, fl);
        bool ok = want && rep.multiset() == *want && rep.euler_sum == 24 &&
                  (torsion < 0 || rep.two_torsion_order == torsion);
        out.push_back({name, ok,
                       ok ? "" : "got " + fibers_str(rep.multiset()) + ", want " +
                                     (want ? fibers_str(*want) : std::string("(none)"))});
    };

    // tangent stratum via the conic-tangent realization of (2,3,5)
    JInvariants jt = j_invariants_of(from_rosenhain(Rational(2), Rational(3), Rational(5)));
    ConfluenceFlags tangent;
    tangent.generic = false;
    tangent.tangent = true;
    expect_match("tangent: Y alternate shows I5*", y_alternate(jt), FibrationLabel::YAlternate,
                 tangent, 2);
    // the natural fibration keeps its pattern on the tangent stratum; the moduli
    // (2,3,5,-15) solve the tangency condition
    expect_match("tangent: natural fibration keeps 6 I2 + 2 I0*",
                 natural_fibration(Rational(2), Rational(3), Rational(5), Rational(-15)),
                 FibrationLabel::Natural, tangent, 4);
    auto pt = std::get<SexticParams<Rational>>(solve_params(jt));
    expect_match("tangent: X alternate shows I10*", x_alternate(pt), FibrationLabel::XAlternate,
                 tangent);
    expect_match("tangent: X standard shows II*", x_standard(pt), FibrationLabel::XStandard,
                 tangent);
    expect_match("tangent: X alternate dual shows III*", x_alternate_bfdual(pt),
                 FibrationLabel::XAlternateDual, tangent);

    // Disc(A) = 0 stratum via the moduli (2,2,4,5)
    JInvariants jda = j_of_moduli(Rational(2), Rational(2), Rational(4), Rational(5));
    ConfluenceFlags da;
    da.generic = false;
    da.disc_a_zero = true;
    auto pda = std::get<SexticParams<Rational>>(solve_params(jda));
    expect_match("Disc(A) = 0: X alternate shows I4", x_alternate(pda), FibrationLabel::XAlternate,
                 da);
    expect_match("Disc(A) = 0: X alternate dual shows I3*", x_alternate_bfdual(pda),
                 FibrationLabel::XAlternateDual, da);

    // Disc(S) = 0 stratum: the moduli (2,4,5,7) sit on exactly one component
    // (component 10: t2 = t3, t7 = t8, t9 = t10), so exactly one I1 pair merges
    JInvariants jds = j_of_moduli(Rational(2), Rational(4), Rational(5), Rational(7));
    ConfluenceFlags ds;
    ds.generic = false;
    ds.disc_s_zero = true;
    auto solved_ds = solve_params(jds);
    std::visit(
        [&](const auto& pds) {
            expect_match("Disc(S) = 0: X alternate merges two I1 into I2", x_alternate(pds),
                         FibrationLabel::XAlternate, ds);
            expect_match("Disc(S) = 0: X alternate dual merges two I1 into I2",
                         x_alternate_bfdual(pds), FibrationLabel::XAlternateDual, ds);
            expect_match("Disc(S) = 0: X standard merges two I1 into I2", x_standard(pds),
                         FibrationLabel::XStandard, ds);
        },
        solved_ds);

    // Res(A,B) = 0: force a shared root of A and B at t = 1
    {
        Rational alpha(2), gamma(3), zeta(5);
        Rational beta = (Rational(1) - Rational(3) * alpha) / Rational(2);
        SexticParams<Rational> p{alpha, beta, gamma, gamma, Rational(1), zeta};  // A(1) = 0
        ConfluenceFlags rb;
        rb.generic = false;
        rb.res_ab_zero = true;
        expect_match("Res(A,B) = 0: X alternate merges I1 + I2 into III", x_alternate(p),
                     FibrationLabel::XAlternate, rb);
    }

    // shared root of f/s^3 and g/s^5 at s = 1: gamma - 3 alpha + epsilon = 0 and
    // delta + 2 beta + zeta = 0
    {
        SexticParams<Rational> p{Rational(1), Rational(1), Rational(2), Rational(1), Rational(1),
                                 Rational(-3)};
        ConfluenceFlags rb;
        rb.generic = false;
        rb.res_ab_zero = true;
        expect_match("standard-model coalescence: two I1 merge into II", x_standard(p),
                     FibrationLabel::XStandard, rb);
    }

    // shared root of the dual model's f/T^2 and g/T^3 at T = 1
    {
        SexticParams<Rational> p{Rational(1), Rational(13, 27), Rational(1), Rational(0),
                                 Rational(1), Rational(-10, 3)};
        ConfluenceFlags rb;
        rb.generic = false;
        rb.res_ab_zero = true;
        expect_match("dual-model coalescence: two I1 merge into II", x_alternate_bfdual(p),
                     FibrationLabel::XAlternateDual, rb);
    }

    // Disc(A) = Res(A,B) = 0: double root of A at the root of B
    {
        Rational alpha(2), r(1);
        Rational beta = (r.pow(3) - Rational(3) * alpha * r) / Rational(2);
        SexticParams<Rational> p{alpha, beta, Rational(1), r, Rational(1), r};  // A = (t-r)^2
        ConfluenceFlags c34;
        c34.generic = false;
        c34.cases34 = true;
        expect_match("Disc(A) = Res(A,B) = 0: X alternate shows I0*", x_alternate(p),
                     FibrationLabel::XAlternate, c34);
        expect_match("Disc(A) = Res(A,B) = 0: X alternate dual shows I4*", x_alternate_bfdual(p),
                     FibrationLabel::XAlternateDual, c34);
    }

    // J4 = J5 = 0 split: constant A via gamma = epsilon = 0
    {
        SexticParams<Rational> p{Rational(2), Rational(3), Rational(0), Rational(1), Rational(0),
                                 Rational(7)};
        ConfluenceFlags c5;
        c5.generic = false;
        c5.case5 = true;
        expect_match("J4 = J5 = 0: X alternate shows I12*", x_alternate(p),
                     FibrationLabel::XAlternate, c5);
        expect_match("J4 = J5 = 0: X alternate dual shows two II*", x_alternate_bfdual(p),
                     FibrationLabel::XAlternateDual, c5);
        expect_match("J4 = J5 = 0: X standard shows two II*", x_standard(p),
                     FibrationLabel::XStandard, c5);
    }
    return out;
}

CheckResult isogeny_suite() {
    IsogenyCertificate cert = verify_isogeny_symbolic();
    std::string detail;
    if (!cert.all_ok()) detail = "a symbolic identity failed";
    return {"symbolic two-isogeny suite with indeterminate A, B", cert.all_ok(), detail};
}

CheckResult moduli_roundtrip(int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);

    // golden quadratic-extension case
    {
        JInvariants j{Rational(63), Rational(-243), Rational(729), Rational(-8748),
                      Rational(-32076)};
        auto solved = solve_params(j);
        auto* pq = std::get_if<SexticParams<QuadExt>>(&solved);
        if (!pq) return {"moduli round trip", false, "golden case solved rationally"};
        QuadExt zeta_expect(Rational(-6), Rational(4), 5);
        QuadExt delta_expect(Rational(-4374), Rational(-2916), 5);
        if (!(pq->zeta == zeta_expect) || !(pq->delta == delta_expect) ||
            !(pq->delta * pq->zeta == QuadExt(Rational(-32076))))
            return {"moduli round trip", false, "golden parameters differ"};
        if (!weighted_equal(moduli_match(*pq), promote(j.as_weighted_point())))
            return {"moduli round trip", false, "golden weighted equality failed"};
    }

    int ext_cases = 0;
    for (int i = 0; i < samples; ++i) {
        JInvariants j{rand_rational(rng), rand_rational(rng), rand_rational(rng),
                      rand_rational(rng), rand_rational(rng)};
        if (!j.valid()) { --i; continue; }
        if (j.j4.is_zero() && j.j5.is_zero() && j.j6.is_zero()) { --i; continue; }
        auto solved = solve_params(j);
        bool ok;
        if (auto* pr = std::get_if<SexticParams<Rational>>(&solved)) {
            ok = weighted_equal(moduli_match(*pr), j.as_weighted_point());
        } else {
            auto& pe = std::get<SexticParams<QuadExt>>(solved);
            ok = weighted_equal(moduli_match(pe), promote(j.as_weighted_point()));
            ++ext_cases;
        }
        if (!ok) return {"moduli round trip", false, "failure at sample " + std::to_string(i)};
    }
    if (ext_cases == 0)
        return {"moduli round trip", false, "no quadratic-extension case was sampled"};
    return {"moduli round trip: moduli_match(solve_params(J)) = J for " +
                std::to_string(samples) + " random valid J (" + std::to_string(ext_cases) +
                " over quadratic extensions)",
            true, ""};
}

CheckResult quartic_symmetries(int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        SexticParams<Rational> p{rand_rational(rng), rand_rational(rng), rand_nonzero(rng),
                                 rand_nonzero(rng), rand_nonzero(rng), rand_nonzero(rng)};
        if (i % 5 == 3) p.epsilon = Rational(0);  // edge family epsilon = 0
        if (i % 5 == 4) p.gamma = Rational(0);    // edge family gamma = 0
        Rational t = rand_nonzero(rng);
        auto sym = verify_symmetries(p, t);
        auto proj = verify_projections(p);
        if (!sym.all_ok() || !proj.all_ok())
            return {"quartic symmetry and projection checks", false,
                    "failure at sample " + std::to_string(i)};
    }
    return {"quartic symmetry and projection checks (" + std::to_string(samples) +
                " parameter points)",
            true, ""};
}

CheckResult s6_invariance() {
    Configuration base = from_moduli(Rational(2), Rational(3), Rational(4), Rational(5));
    JInvariants j0 = j_invariants_of(base);
    std::array<int, 6> sigma{1, 2, 3, 4, 5, 6};
    int count = 0;
    do {
        JInvariants j = j_invariants_of(permute(base, sigma));
        if (!(j == j0))
            return {"S6 invariance of the J-invariants", false,
                    "permutation #" + std::to_string(count) + " changed J"};
        ++count;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return {"S6 invariance of the J-invariants over all 720 line permutations", count == 720,
            ""};
}

CheckResult tangent_restriction(int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        Rational l1, l2, l3;
        do {
            l1 = rand_rational(rng, 12, 4);
            l2 = rand_rational(rng, 12, 4);
            l3 = rand_rational(rng, 12, 4);
        } while (l1.is_zero() || l2.is_zero() || l3.is_zero() || l1.is_one() || l2.is_one() ||
                 l3.is_one() || l1 == l2 || l1 == l3 || l2 == l3);
        auto rep = restriction_check(make_rosenhain(l1, l2, l3));
        if (!rep.all_ok())
            return {"tangent restriction identity", false,
                    "failure at lambda = (" + l1.str() + "," + l2.str() + "," + l3.str() + ")"};
    }
    return {"tangent restriction identity (" + std::to_string(samples) + " random curves)", true,
            ""};
}

std::vector<CheckResult> run_all(std::uint64_t seed, int samples_large, int samples_small) {
    std::vector<CheckResult> out;
    auto add = [&](CheckResult r) { out.push_back(std::move(r)); };
    auto add_all = [&](std::vector<CheckResult> rs) {
        for (auto& r : rs) out.push_back(std::move(r));
    };
    add_all(appendix_identity(samples_large, seed));
    add_all(plucker_relations_symbolic());
    add(r_closed_form_symbolic());
    add(r_squared_identity_symbolic());
    add(r_squared_j4_symbolic());
    add(disc_a_product_symbolic());
    add(disc_s_factorization(samples_small, seed + 1));
    add_all(golden_example());
    add_all(fibration_patterns(10, seed + 2));
    add_all(confluences());
    add(isogeny_suite());
    add(moduli_roundtrip(samples_small, seed + 3));
    add(quartic_symmetries(20, seed + 4));
    add(s6_invariance());
    add(tangent_restriction(20, seed + 5));
    return out;
}

}  // namespace sixlines::verify
