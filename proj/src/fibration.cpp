#include "sixlines/fibration.hpp"

#include <algorithm>
#include <stdexcept>

namespace sixlines {

const char* fibration_label_name(FibrationLabel l) {
    switch (l) {
        case FibrationLabel::Natural: return "natural";
        case FibrationLabel::NaturalDual: return "natural-dual";
        case FibrationLabel::YAlternate: return "y-alt";
        case FibrationLabel::XStandard: return "x-std";
        case FibrationLabel::XAlternate: return "x-alt";
        case FibrationLabel::XAlternateDual: return "x-alt-dual";
    }
    return "?";
}

std::optional<FibrationLabel> fibration_label_from_name(const std::string& s) {
    for (FibrationLabel l :
         {FibrationLabel::Natural, FibrationLabel::NaturalDual, FibrationLabel::YAlternate,
          FibrationLabel::XStandard, FibrationLabel::XAlternate, FibrationLabel::XAlternateDual})
        if (s == fibration_label_name(l)) return l;
    return std::nullopt;
}

int KodairaType::euler() const {
    switch (family) {
        case In: return n;
        case InStar: return n + 6;
        case II: return 2;
        case III: return 3;
        case IV: return 4;
        case IVStar: return 8;
        case IIIStar: return 9;
        case IIStar: return 10;
    }
    return 0;
}

std::string KodairaType::name() const {
    switch (family) {
        case In: return "I" + std::to_string(n);
        case InStar: return "I" + std::to_string(n) + "*";
        case II: return "II";
        case III: return "III";
        case IV: return "IV";
        case IVStar: return "IV*";
        case IIIStar: return "III*";
        case IIStar: return "II*";
    }
    return "?";
}

std::optional<KodairaType> kodaira_type_from_name(const std::string& s) {
    if (s == "II") return KodairaType{KodairaType::II, 0};
    if (s == "III") return KodairaType{KodairaType::III, 0};
    if (s == "IV") return KodairaType{KodairaType::IV, 0};
    if (s == "II*") return KodairaType{KodairaType::IIStar, 0};
    if (s == "III*") return KodairaType{KodairaType::IIIStar, 0};
    if (s == "IV*") return KodairaType{KodairaType::IVStar, 0};
    if (s.size() >= 2 && s[0] == 'I') {
        bool star = s.back() == '*';
        std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
            int n = std::stoi(digits);
            if (star) return KodairaType{KodairaType::InStar, n};
            if (n >= 1) return KodairaType{KodairaType::In, n};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// model builders

WeierstrassModel<Rational> natural_fibration(const Rational& a, const Rational& b,
                                             const Rational& c, const Rational& d) {
    Stratum s = classify(from_moduli(a, b, c, d));
    if (s.status == StratumCase::FourConcurrentOrDoubleLine ||
        s.status == StratumCase::OtherDegenerate)
        throw std::invalid_argument(
            "natural_fibration: configuration in case (6) or worse; model would be non-minimal");
    // Y^2 = X (X - u*P1) (X - u*P2) with 2(mu-nu) = P1, 2(mu+nu) = P2
    RatPoly u = RatPoly::x();
    RatPoly P1 = RatPoly(std::vector<Rational>{b, a}) *
                 RatPoly(std::vector<Rational>{d - Rational(1), c - Rational(1)});
    RatPoly P2 = RatPoly(std::vector<Rational>{d, c}) *
                 RatPoly(std::vector<Rational>{b - Rational(1), a - Rational(1)});
    RatPoly p = u * P1, q = u * P2;
    return {-(p + q), p * q, RatPoly(), FibrationLabel::Natural};
}

WeierstrassModel<Rational> natural_bfdual(const Rational& a, const Rational& b, const Rational& c,
                                          const Rational& d) {
    Stratum s = classify(from_moduli(a, b, c, d));
    if (s.status == StratumCase::FourConcurrentOrDoubleLine ||
        s.status == StratumCase::OtherDegenerate)
        throw std::invalid_argument(
            "natural_bfdual: configuration in case (6) or worse; model would be non-minimal");
    RatPoly P1 = RatPoly(std::vector<Rational>{b, a}) *
                 RatPoly(std::vector<Rational>{d - Rational(1), c - Rational(1)});
    RatPoly P2 = RatPoly(std::vector<Rational>{d, c}) *
                 RatPoly(std::vector<Rational>{b - Rational(1), a - Rational(1)});
    // mu = (P1+P2)/4 and nu = (P2-P1)/4 as quadratics in u
    RatPoly mu = (P1 + P2) * Rational(1, 4);
    RatPoly nu2 = (P2 - P1) * (P2 - P1) * Rational(1, 16);
    // eta^2 = nu(u)^2 xi^4 + 2 u mu(u) xi^2 + u^2, regrouped as a quartic in u:
    // A u^4 + B u^3 + C u^2 + D u + E^2 with coefficients in Q[xi]
    auto xi2 = RatPoly::monomial(2, Rational(1));
    auto xi4 = RatPoly::monomial(4, Rational(1));
    RatPoly A = xi4 * nu2.coeff(4);
    RatPoly B = xi4 * nu2.coeff(3) + xi2 * (Rational(2) * mu.coeff(2));
    RatPoly C = xi4 * nu2.coeff(2) + xi2 * (Rational(2) * mu.coeff(1)) + RatPoly(Rational(1));
    RatPoly D = xi4 * nu2.coeff(1) + xi2 * (Rational(2) * mu.coeff(0));
    // E^2 = nu(0)^2 xi^4
    RatPoly E = xi2 * ((P2.coeff(0) - P1.coeff(0)) * Rational(1, 4));
    RatPoly g2 = C * C * Rational(16, 3) + A * E * E * Rational(64) - B * D * Rational(16);
    RatPoly g3 = C * C * C * Rational(-64, 27) + A * C * E * E * Rational(256, 3) +
                 B * C * D * Rational(32, 3) - A * D * D * Rational(32) -
                 B * B * E * E * Rational(32);
    // y^2 = 4x^3 - g2 x - g3 rescales to Y^2 = X^3 - 4 g2 X - 16 g3
    return {RatPoly(), g2 * Rational(-4), g3 * Rational(-16), FibrationLabel::NaturalDual};
}

WeierstrassModel<Rational> y_alternate(const JInvariants& j) {
    if (!j.valid())
        throw std::invalid_argument("y_alternate: (J3,J4,J5) = (0,0,0) is not a valid point");
    SatakeSextic sx = satake_sextic(j);
    // Y^2 = X (X^2 - 2B X + B^2 - 4A)
    return {sx.b * Rational(-2), sx.b * sx.b - sx.a * Rational(4), RatPoly(),
            FibrationLabel::YAlternate};
}

namespace {
template <class K>
void require_polarized(const SexticParams<K>& p, const char* who) {
    if (p.gamma == K(0) && p.delta == K(0))
        throw std::invalid_argument(std::string(who) + ": (gamma,delta) = (0,0)");
    if (p.epsilon == K(0) && p.zeta == K(0))
        throw std::invalid_argument(std::string(who) + ": (epsilon,zeta) = (0,0)");
}
}  // namespace

template <class K>
WeierstrassModel<K> x_standard(const SexticParams<K>& p) {
    require_polarized(p, "x_standard");
    // f = 4 s^3 (gamma s^2 - 3 alpha s + epsilon), g = -8 s^5 (delta s^2 + 2 beta s + zeta)
    Poly<K> f = Poly<K>::monomial(3, scalar_of<K>(4)) *
                Poly<K>(std::vector<K>{p.epsilon, scalar_of<K>(-3) * p.alpha, p.gamma});
    Poly<K> g = Poly<K>::monomial(5, scalar_of<K>(-8)) *
                Poly<K>(std::vector<K>{p.zeta, scalar_of<K>(2) * p.beta, p.delta});
    return {Poly<K>(), f, g, FibrationLabel::XStandard};
}

template <class K>
WeierstrassModel<K> x_alternate(const SexticParams<K>& p) {
    require_polarized(p, "x_alternate");
    // y^2 = x (x^2 + B x + A), A = (gamma t - delta)(epsilon t - zeta), B = t^3 - 3 alpha t - 2 beta
    Poly<K> A = Poly<K>(std::vector<K>{K(0) - p.delta, p.gamma}) *
                Poly<K>(std::vector<K>{K(0) - p.zeta, p.epsilon});
    Poly<K> B = Poly<K>(std::vector<K>{scalar_of<K>(-2) * p.beta, scalar_of<K>(-3) * p.alpha,
                                       K(0), K(1)});
    return {B, A, Poly<K>(), FibrationLabel::XAlternate};
}

template <class K>
WeierstrassModel<K> x_alternate_bfdual(const SexticParams<K>& p) {
    require_polarized(p, "x_alternate_bfdual");
    const K ge = p.gamma * p.epsilon;
    const K gz_de = p.gamma * p.zeta + p.delta * p.epsilon;
    // fcheck = -T^2 (9 alpha T^2 + 3(gamma zeta + delta epsilon) T + (gamma epsilon)^2)/3
    Poly<K> fch = Poly<K>::monomial(2, scalar_of<K>(-1, 3)) *
                  Poly<K>(std::vector<K>{ge * ge, scalar_of<K>(3) * gz_de,
                                         scalar_of<K>(9) * p.alpha});
    // gcheck = T^3 (27 T^4 - 54 beta T^3 + 27(alpha gamma epsilon + delta zeta) T^2
    //          + 9 gamma epsilon (delta epsilon + gamma zeta) T + 2 (gamma epsilon)^3)/27
    Poly<K> gch = Poly<K>::monomial(3, scalar_of<K>(1, 27)) *
                  Poly<K>(std::vector<K>{scalar_of<K>(2) * ge * ge * ge,
                                         scalar_of<K>(9) * ge * gz_de,
                                         scalar_of<K>(27) * (p.alpha * ge + p.delta * p.zeta),
                                         scalar_of<K>(-54) * p.beta, scalar_of<K>(27)});
    return {Poly<K>(), fch, gch, FibrationLabel::XAlternateDual};
}

// ---------------------------------------------------------------------------
// two-torsion sections

namespace {

// integer roots of a monic integer cubic (or lower-degree monic) polynomial
std::vector<mpz_class> integer_roots_monic(const std::vector<mpz_class>& c) {
    // c: coefficients low-first, c.back() == 1, degree <= 3
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<mpz_class> roots;
    auto eval = [&](const mpz_class& v) {
        mpz_class acc = 0;
        for (int i = n; i >= 0; --i) acc = acc * v + c[i];
        return acc;
    };
    // Cauchy bound: all roots within 1 + max |c_i|
    mpz_class M = 1;
    for (int i = 0; i < n; ++i) M = std::max(M, mpz_class(::abs(c[i])));
    M += 1;
    // split [-M, M] into monotone pieces at the stationary points (bracketed to
    // within one integer on each side), then bisect on sign changes
    std::vector<mpz_class> cuts{-M, M};
    if (n == 2) {
        cuts.push_back(-c[1] / 2 - 1);
        cuts.push_back(-c[1] / 2 + 1);
    } else if (n == 3) {
        // stationary points of x^3 + c2 x^2 + c1 x + c0 solve 3x^2 + 2 c2 x + c1
        mpz_class D = 4 * c[2] * c[2] - 12 * c[1];
        if (D >= 0) {
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), D.get_mpz_t());
            cuts.push_back((-2 * c[2] - r) / 6 - 1);
            cuts.push_back((-2 * c[2] - r) / 6 + 1);
            cuts.push_back((-2 * c[2] + r) / 6 - 1);
            cuts.push_back((-2 * c[2] + r) / 6 + 1);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        mpz_class lo = std::max(cuts[i], mpz_class(-M)), hi = std::min(cuts[i + 1], M);
        if (lo > hi) continue;
        if (hi - lo <= 4) {
            // short piece around a stationary point; test every integer (catches
            // double roots that leave no sign change)
            for (mpz_class v = lo; v <= hi; ++v)
                if (eval(v) == 0) roots.push_back(v);
            continue;
        }
        mpz_class flo = eval(lo), fhi = eval(hi);
        if (flo == 0) roots.push_back(lo);
        if (fhi == 0) roots.push_back(hi);
        if (sgn(flo) * sgn(fhi) >= 0) continue;
        // monotone piece with a sign change: binary search
        while (hi - lo > 1) {
            mpz_class mid = (lo + hi) / 2;
            mpz_class fm = eval(mid);
            if (fm == 0) { roots.push_back(mid); break; }
            if (sgn(fm) == sgn(flo)) { lo = mid; flo = fm; }
            else hi = mid;
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// rational roots of a monic cubic with rational coefficients
std::vector<Rational> rational_roots_monic_cubic(const std::vector<Rational>& c) {
    // substitute x = z/m with m the lcm of denominators: z^3 + c2 m z^2 + c1 m^2 z + c0 m^3
    const int n = static_cast<int>(c.size()) - 1;
    mpz_class m = 1;
    for (int i = 0; i < n; ++i) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), c[i].den().get_mpz_t());
    std::vector<mpz_class> zc(n + 1);
    zc[n] = 1;
    mpz_class mp = 1;
    for (int i = n - 1; i >= 0; --i) {
        mp *= m;
        mpz_class scaled_num = c[i].num() * mp;
        zc[i] = scaled_num / c[i].den();
    }
    std::vector<Rational> out;
    for (const auto& z : integer_roots_monic(zc)) out.emplace_back(mpq_class(z, m));
    return out;
}

// polynomial roots r(t) in Q[t] of the monic cubic x^3 + a2 x^2 + a4 x + a6, found by
// interpolation through exact numeric roots; complete given the degree bound
std::vector<RatPoly> cubic_poly_roots(const RatPoly& a2, const RatPoly& a4, const RatPoly& a6) {
    int dbound = std::max({a2.degree(), (a4.degree() + 1) / 2, (a6.degree() + 2) / 3, 0});
    const int npts = dbound + 1;
    std::vector<Rational> ts;
    std::vector<std::vector<Rational>> root_sets;
    long t0 = 0;
    while (static_cast<int>(ts.size()) < npts) {
        Rational t(t0++);
        std::vector<Rational> c{a6(t), a4(t), a2(t), Rational(1)};
        root_sets.push_back(rational_roots_monic_cubic(c));
        ts.push_back(t);
        if (root_sets.back().empty()) return {};  // no section can specialize here
    }
    // try all combinations of one root per sample point; interpolate; verify
    std::vector<RatPoly> found;
    std::vector<size_t> pick(npts, 0);
    while (true) {
        // Lagrange interpolation
        RatPoly r;
        for (int i = 0; i < npts; ++i) {
            RatPoly li(Rational(1));
            Rational denom(1);
            for (int j = 0; j < npts; ++j) {
                if (i == j) continue;
                li *= RatPoly(std::vector<Rational>{-ts[j], Rational(1)});
                denom *= ts[i] - ts[j];
            }
            r += li * (root_sets[i][pick[i]] / denom);
        }
        RatPoly val = r * r * r + a2 * r * r + a4 * r + a6;
        if (val.is_zero() && std::find(found.begin(), found.end(), r) == found.end())
            found.push_back(r);
        int k = npts - 1;
        while (k >= 0 && pick[k] + 1 >= root_sets[k].size()) pick[k--] = 0;
        if (k < 0) break;
        ++pick[k];
    }
    return found;
}

int count_cubic_roots(const RatPoly& a2, const RatPoly& a4, const RatPoly& a6) {
    return static_cast<int>(cubic_poly_roots(a2, a4, a6).size());
}

// sound nonexistence check over Q(sqrt(D)): reduce at a prime p where D is a
// quadratic residue; a section's specialization would reduce to a root mod p
bool cubic_root_excluded_mod_p(const Poly<QuadExt>& a2, const Poly<QuadExt>& a4,
                               const Poly<QuadExt>& a6) {
    long long Dll = 0;
    for (const auto* poly : {&a2, &a4, &a6})
        for (const auto& cf : poly->coeffs())
            if (cf.radicand() != 0) Dll = cf.radicand();
    static constexpr long kPrimes[] = {1009, 2003, 3001, 5003, 7001, 9001, 10007, 20011, 30011};
    for (long p : kPrimes) {
        mpz_class pz(p), Dz(static_cast<long>(Dll));
        if (Dll != 0 && mpz_legendre(Dz.get_mpz_t(), pz.get_mpz_t()) != 1) continue;
        // square root of D mod p by brute force
        long dmod = static_cast<long>(((Dll % p) + p) % p);
        long sq = -1;
        for (long s = 0; s < p; ++s)
            if ((s * s) % p == dmod) { sq = s; break; }
        if (sq < 0) continue;  // not a residue after all
        auto red = [&](const QuadExt& v, bool& ok) -> long {
            // value = base + coeff*sqrt(D) -> base + coeff*sq (mod p)
            mpz_class bn = v.base().num(), bd = v.base().den();
            mpz_class cn = v.coeff().num(), cd = v.coeff().den();
            if (mpz_divisible_p(bd.get_mpz_t(), pz.get_mpz_t()) ||
                mpz_divisible_p(cd.get_mpz_t(), pz.get_mpz_t())) {
                ok = false;
                return 0;
            }
            mpz_class bdi, cdi;
            mpz_invert(bdi.get_mpz_t(), bd.get_mpz_t(), pz.get_mpz_t());
            mpz_invert(cdi.get_mpz_t(), cd.get_mpz_t(), pz.get_mpz_t());
            mpz_class r = (bn * bdi + cn * cdi * sq) % pz;
            return mpz_class((r % pz + pz) % pz).get_si();
        };
        for (long t0 = 0; t0 < 8; ++t0) {
            bool ok = true;
            QuadExt tv{Rational(t0)};
            long c0 = red(a6(tv), ok), c1 = red(a4(tv), ok), c2 = red(a2(tv), ok);
            if (!ok) continue;
            bool has_root = false;
            for (long x = 0; x < p && !has_root; ++x) {
                long v = (((x * x) % p * x) % p + (c2 * ((x * x) % p)) % p + (c1 * x) % p + c0) % p;
                if (v % p == 0) has_root = true;
            }
            if (!has_root) return true;  // no root mod p => no section exists
        }
    }
    return false;
}

template <class K>
int two_torsion_order(const WeierstrassModel<K>& m);

template <>
int two_torsion_order(const WeierstrassModel<Rational>& m) {
    int roots = 0;
    if (m.a6.is_zero()) {
        roots = 1;  // the section x = 0
        // remaining quadratic x^2 + a2 x + a4 splits iff its discriminant is a square
        RatPoly disc = m.a2 * m.a2 - m.a4 * Rational(4);
        if (disc.is_zero() || poly_sqrt(disc)) roots += 2;
    } else {
        roots = count_cubic_roots(m.a2, m.a4, m.a6);
    }
    return roots == 3 ? 4 : (roots >= 1 ? 2 : 1);
}

template <>
int two_torsion_order(const WeierstrassModel<QuadExt>& m) {
    long long field = 0;
    for (const auto* poly : {&m.a2, &m.a4, &m.a6})
        for (const auto& cf : poly->coeffs())
            if (cf.radicand() != 0) field = cf.radicand();
    int roots = 0;
    if (m.a6.is_zero()) {
        roots = 1;
        ExtPoly disc = m.a2 * m.a2 - m.a4 * QuadExt(Rational(4));
        if (disc.is_zero() || poly_sqrt(disc, field)) roots += 2;
    } else {
        if (cubic_root_excluded_mod_p(m.a2, m.a4, m.a6)) {
            roots = 0;
        } else {
            throw std::domain_error(
                "two_torsion_order: inconclusive section search over the quadratic extension");
        }
    }
    return roots == 3 ? 4 : (roots >= 1 ? 2 : 1);
}

}  // namespace

// ---------------------------------------------------------------------------
// Kodaira classification

namespace {

std::optional<KodairaType> type_from_orders(long of, long og, long od) {
    if (od <= 0) return std::nullopt;
    if (of == 0) return KodairaType{KodairaType::In, static_cast<int>(od)};
    if (of >= 1 && og == 1 && od == 2) return KodairaType{KodairaType::II, 0};
    if (of == 1 && og >= 2 && od == 3) return KodairaType{KodairaType::III, 0};
    if (of >= 2 && og == 2 && od == 4) return KodairaType{KodairaType::IV, 0};
    if (((of == 2 && og >= 3) || (of >= 2 && og == 3)) && od == 6)
        return KodairaType{KodairaType::InStar, 0};
    if (of == 2 && og == 3 && od > 6) return KodairaType{KodairaType::InStar, static_cast<int>(od - 6)};
    if (of >= 3 && og == 4 && od == 8) return KodairaType{KodairaType::IVStar, 0};
    if (of == 3 && og >= 5 && od == 9) return KodairaType{KodairaType::IIIStar, 0};
    if (of >= 4 && og == 5 && od == 10) return KodairaType{KodairaType::IIStar, 0};
    return std::nullopt;
}

constexpr long kOrdInfinity = 1L << 40;  // stands for the order of the zero polynomial

}  // namespace

template <class K>
FiberReport<K> kodaira_classify(const WeierstrassModel<K>& m) {
    Poly<K> f = m.short_f(), g = m.short_g(), D = m.disc();
    if (D.is_zero()) throw std::invalid_argument("kodaira_classify: identically singular model");
    if (f.degree() > 8 || g.degree() > 12 || D.degree() > 24)
        throw std::invalid_argument("kodaira_classify: degrees exceed the K3 bounds (8/12/24)");

    // gcd-free refinement of the squarefree parts of f, g, Delta
    std::vector<std::pair<Poly<K>, int>> fd, gd, dd;
    if (!f.is_zero()) fd = squarefree_decompose(f);
    if (!g.is_zero()) gd = squarefree_decompose(g);
    dd = squarefree_decompose(D);
    std::vector<Poly<K>> parts;
    for (const auto* dec : {&fd, &gd, &dd})
        for (const auto& [p, mult] : *dec) parts.push_back(p);
    std::vector<Poly<K>> basis = gcd_free_basis(parts);

    auto ord_in = [](const std::vector<std::pair<Poly<K>, int>>& dec, const Poly<K>& place,
                     bool zero_poly) -> long {
        if (zero_poly) return kOrdInfinity;
        long o = 0;
        for (const auto& [p, mult] : dec)
            if (place.divides(p)) o += mult;
        return o;
    };

    FiberReport<K> rep;
    for (const Poly<K>& place : basis) {
        long od = ord_in(dd, place, false);
        if (od == 0) continue;
        long of = ord_in(fd, place, f.is_zero());
        long og = ord_in(gd, place, g.is_zero());
        if (of >= 4 && og >= 6)
            throw std::domain_error("kodaira_classify: non-minimal place at " + place.str("t"));
        auto ty = type_from_orders(of, og, od);
        if (!ty)
            throw std::domain_error("kodaira_classify: unrecognized order pattern (" +
                                    std::to_string(of) + "," + std::to_string(og) + "," +
                                    std::to_string(od) + ") at " + place.str("t"));
        rep.fibers.push_back(KodairaFiber<K>{*ty, place, place.degree()});
    }
    // place at infinity via reciprocal transforms with the K3 bounds
    long ofi = f.is_zero() ? kOrdInfinity : f.reciprocal(8).ord_at_zero();
    long ogi = g.is_zero() ? kOrdInfinity : g.reciprocal(12).ord_at_zero();
    long odi = D.reciprocal(24).ord_at_zero();
    if (odi > 0) {
        if (ofi >= 4 && ogi >= 6)
            throw std::domain_error("kodaira_classify: non-minimal place at infinity");
        auto ty = type_from_orders(ofi, ogi, odi);
        if (!ty)
            throw std::domain_error("kodaira_classify: unrecognized order pattern (" +
                                    std::to_string(ofi) + "," + std::to_string(ogi) + "," +
                                    std::to_string(odi) + ") at infinity");
        rep.fibers.push_back(KodairaFiber<K>{*ty, std::nullopt, 1});
    }
    std::sort(rep.fibers.begin(), rep.fibers.end(),
              [](const KodairaFiber<K>& a, const KodairaFiber<K>& b) {
                  if (a.place.has_value() != b.place.has_value()) return a.place.has_value();
                  if (!a.place) return false;
                  if (a.place->degree() != b.place->degree())
                      return a.place->degree() < b.place->degree();
                  return a.place->str("t") < b.place->str("t");
              });
    rep.euler_sum = 0;
    for (const auto& fb : rep.fibers) rep.euler_sum += fb.type.euler() * fb.count;
    rep.two_torsion_order = two_torsion_order(m);
    return rep;
}

template FiberReport<Rational> kodaira_classify(const WeierstrassModel<Rational>&);
template FiberReport<QuadExt> kodaira_classify(const WeierstrassModel<QuadExt>&);
template WeierstrassModel<Rational> x_standard(const SexticParams<Rational>&);
template WeierstrassModel<QuadExt> x_standard(const SexticParams<QuadExt>&);
template WeierstrassModel<Rational> x_alternate(const SexticParams<Rational>&);
template WeierstrassModel<QuadExt> x_alternate(const SexticParams<QuadExt>&);
template WeierstrassModel<Rational> x_alternate_bfdual(const SexticParams<Rational>&);
template WeierstrassModel<QuadExt> x_alternate_bfdual(const SexticParams<QuadExt>&);

// ---------------------------------------------------------------------------
// confluence predictions

std::optional<std::map<std::string, int>> expected_fibers(FibrationLabel label,
                                                          const ConfluenceFlags& fl) {
    using M = std::map<std::string, int>;
    switch (label) {
        case FibrationLabel::Natural:
            if (fl.generic || fl.tangent) return M{{"I2", 6}, {"I0*", 2}};
            return std::nullopt;
        case FibrationLabel::NaturalDual:
            if (fl.generic) return M{{"I1", 12}, {"I4", 1}, {"I8", 1}};
            return std::nullopt;
        case FibrationLabel::YAlternate:
            if (fl.tangent) return M{{"I2", 6}, {"I5*", 1}, {"I1", 1}};
            if (fl.generic) return M{{"I2", 6}, {"I1", 2}, {"I4*", 1}};
            return std::nullopt;
        case FibrationLabel::XStandard:
            if (fl.case5) return M{{"II*", 2}, {"I1", 4}};
            if (fl.tangent) return M{{"II*", 1}, {"III*", 1}, {"I1", 5}};
            if (fl.disc_s_zero) return M{{"III*", 2}, {"I2", 1}, {"I1", 4}};
            if (fl.res_ab_zero) return M{{"III*", 2}, {"II", 1}, {"I1", 4}};
            if (fl.generic) return M{{"III*", 2}, {"I1", 6}};
            return std::nullopt;
        case FibrationLabel::XAlternate:
            if (fl.case5) return M{{"I12*", 1}, {"I1", 6}};
            if (fl.cases34) return M{{"I8*", 1}, {"I0*", 1}, {"I1", 4}};
            if (fl.tangent) return M{{"I10*", 1}, {"I2", 1}, {"I1", 6}};
            if (fl.disc_a_zero) return M{{"I8*", 1}, {"I4", 1}, {"I1", 6}};
            if (fl.disc_s_zero) return M{{"I8*", 1}, {"I2", 3}, {"I1", 4}};
            if (fl.res_ab_zero) return M{{"I8*", 1}, {"I2", 1}, {"III", 1}, {"I1", 5}};
            if (fl.generic) return M{{"I8*", 1}, {"I2", 2}, {"I1", 6}};
            return std::nullopt;
        case FibrationLabel::XAlternateDual:
            if (fl.case5) return M{{"II*", 2}, {"I1", 4}};
            if (fl.cases34) return M{{"II*", 1}, {"I4*", 1}, {"I1", 4}};
            if (fl.tangent) return M{{"II*", 1}, {"III*", 1}, {"I1", 5}};
            if (fl.disc_a_zero) return M{{"II*", 1}, {"I3*", 1}, {"I1", 5}};
            if (fl.disc_s_zero) return M{{"II*", 1}, {"I2*", 1}, {"I2", 1}, {"I1", 4}};
            if (fl.res_ab_zero) return M{{"II*", 1}, {"I2*", 1}, {"II", 1}, {"I1", 4}};
            if (fl.generic) return M{{"II*", 1}, {"I2*", 1}, {"I1", 6}};
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace sixlines
