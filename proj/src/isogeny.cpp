#include "sixlines/isogeny.hpp"

#include <stdexcept>

namespace sixlines {

template <class K>
FiberPoint<K> vgs_involution_x(const Poly<K>& A, const Poly<K>& B, const FiberPoint<K>& p) {
    const K a = A(p.t);
    if (p.at_infinity()) return FiberPoint<K>{p.t, std::make_pair(K(0), K(0))};
    const auto& [x, y] = *p.xy;
    if (x == K(0) && y == K(0)) return FiberPoint<K>::infinity(p.t);
    if (x == K(0)) throw std::invalid_argument("vgs_involution_x: point not on the model");
    K xi = a / x;
    K yi = K(0) - a * y / (x * x);
    (void)B;
    return FiberPoint<K>{p.t, std::make_pair(xi, yi)};
}

template <class K>
FiberPoint<K> isogeny_phi_hat(const Poly<K>& A, const Poly<K>& B, const FiberPoint<K>& p) {
    if (p.at_infinity()) return FiberPoint<K>::infinity(p.t);
    const auto& [x, y] = *p.xy;
    if (x == K(0)) return FiberPoint<K>::infinity(p.t);  // two-torsion maps to infinity
    const K a = A(p.t);
    K X = y * y / (x * x);
    K Y = (x * x - a) * y / (x * x);
    (void)B;
    return FiberPoint<K>{p.t, std::make_pair(X, Y)};
}

template <class K>
FiberPoint<K> isogeny_phi(const Poly<K>& A, const Poly<K>& B, const FiberPoint<K>& P) {
    if (P.at_infinity()) return FiberPoint<K>::infinity(P.t);
    const auto& [X, Y] = *P.xy;
    if (X == K(0)) return FiberPoint<K>::infinity(P.t);
    const K a = A(P.t), b = B(P.t);
    K x = Y * Y / (K(4) * X * X);
    K y = Y * (X * X - b * b + K(4) * a) / (K(8) * X * X);
    return FiberPoint<K>{P.t, std::make_pair(x, y)};
}

template <class K>
bool on_x_model(const Poly<K>& A, const Poly<K>& B, const FiberPoint<K>& p) {
    if (p.at_infinity()) return true;
    const auto& [x, y] = *p.xy;
    return y * y == x * (x * x + B(p.t) * x + A(p.t));
}

template <class K>
bool on_y_model(const Poly<K>& A, const Poly<K>& B, const FiberPoint<K>& p) {
    if (p.at_infinity()) return true;
    const auto& [X, Y] = *p.xy;
    const K a = A(p.t), b = B(p.t);
    return Y * Y == X * (X * X - K(2) * b * X + b * b - K(4) * a);
}

template FiberPoint<Rational> vgs_involution_x(const RatPoly&, const RatPoly&,
                                               const FiberPoint<Rational>&);
template FiberPoint<Rational> isogeny_phi_hat(const RatPoly&, const RatPoly&,
                                              const FiberPoint<Rational>&);
template FiberPoint<Rational> isogeny_phi(const RatPoly&, const RatPoly&,
                                          const FiberPoint<Rational>&);
template bool on_x_model(const RatPoly&, const RatPoly&, const FiberPoint<Rational>&);
template bool on_y_model(const RatPoly&, const RatPoly&, const FiberPoint<Rational>&);
template FiberPoint<QuadExt> vgs_involution_x(const ExtPoly&, const ExtPoly&,
                                              const FiberPoint<QuadExt>&);
template FiberPoint<QuadExt> isogeny_phi_hat(const ExtPoly&, const ExtPoly&,
                                             const FiberPoint<QuadExt>&);
template FiberPoint<QuadExt> isogeny_phi(const ExtPoly&, const ExtPoly&,
                                         const FiberPoint<QuadExt>&);
template bool on_x_model(const ExtPoly&, const ExtPoly&, const FiberPoint<QuadExt>&);
template bool on_y_model(const ExtPoly&, const ExtPoly&, const FiberPoint<QuadExt>&);

// ---------------------------------------------------------------------------
// symbolic function-field certificates
//
// Elements of the function field of a generic fiber are represented as
// (p0 + p1*y)/q with p0, p1, q in Q[x, A, B] (q nonzero, y-free), subject to
// y^2 = F(x) for the fiber cubic F. All arithmetic reduces y-powers via that
// relation, so every identity check below is an exact polynomial statement.

namespace {

constexpr int kVX = 0, kVA = 1, kVB = 2;

MultiPoly mp_var(int v) { return MultiPoly::variable(3, v); }
MultiPoly mp_const(const Rational& c) { return MultiPoly::constant(3, c); }

struct CurveFn {
    MultiPoly p0, p1, q;  // (p0 + p1 y)/q
};

struct CurveField {
    MultiPoly F;  // y^2 = F(x)

    CurveFn make(MultiPoly p0) const { return {std::move(p0), MultiPoly(3), mp_const(1)}; }
    CurveFn y() const { return {MultiPoly(3), mp_const(1), mp_const(1)}; }

    CurveFn add(const CurveFn& a, const CurveFn& b) const {
        return {a.p0 * b.q + b.p0 * a.q, a.p1 * b.q + b.p1 * a.q, a.q * b.q};
    }
    CurveFn sub(const CurveFn& a, const CurveFn& b) const {
        return {a.p0 * b.q - b.p0 * a.q, a.p1 * b.q - b.p1 * a.q, a.q * b.q};
    }
    CurveFn mul(const CurveFn& a, const CurveFn& b) const {
        // (p0 + p1 y)(r0 + r1 y) = p0 r0 + p1 r1 F + (p0 r1 + p1 r0) y
        return {a.p0 * b.p0 + a.p1 * b.p1 * F, a.p0 * b.p1 + a.p1 * b.p0, a.q * b.q};
    }
    CurveFn div(const CurveFn& a, const CurveFn& b) const {
        // 1/(r0 + r1 y) = (r0 - r1 y)/(r0^2 - r1^2 F)
        MultiPoly norm = b.p0 * b.p0 - b.p1 * b.p1 * F;
        if (norm.is_zero()) throw std::domain_error("CurveField: division by zero element");
        CurveFn inv{b.p0 * b.q, -(b.p1 * b.q), norm};
        return mul(a, inv);
    }
    bool is_zero(const CurveFn& a) const { return a.p0.is_zero() && a.p1.is_zero(); }
    bool equal(const CurveFn& a, const CurveFn& b) const { return is_zero(sub(a, b)); }
};

struct SymPoint {
    CurveFn x, y;
};

}  // namespace

bool IsogenyCertificate::all_ok() const {
    return involution_x_on_model && involution_x_involutive && involution_x_fixed_locus &&
           phi_hat_image_on_y_model && phi_hat_invariant_under_involution &&
           involution_y_on_model && involution_y_involutive && phi_image_on_x_model &&
           phi_invariant_under_involution_y && phi_after_phi_hat_is_doubling &&
           phi_hat_after_phi_is_doubling;
}

IsogenyCertificate verify_isogeny_symbolic() {
    const MultiPoly x = mp_var(kVX), A = mp_var(kVA), B = mp_var(kVB);
    // X-side fiber y^2 = x(x^2 + Bx + A); Y-side Y^2 = X(X^2 - 2BX + B^2 - 4A)
    const MultiPoly Fx = x * (x * x + B * x + A);
    const MultiPoly Fy =
        x * (x * x - Rational(2) * B * x + B * B - Rational(4) * A);
    CurveField X{Fx}, Yf{Fy};

    IsogenyCertificate cert{};

    // generic point (x, y) on the X-side
    SymPoint gen{X.make(x), X.y()};

    auto eval_on_x = [&](const CurveField& k, const SymPoint& p) {
        // y^2 - x(x^2 + Bx + A) at p
        CurveFn rhs = k.mul(p.x, k.add(k.mul(p.x, p.x),
                                       k.add(k.mul(k.make(B), p.x), k.make(A))));
        return k.sub(k.mul(p.y, p.y), rhs);
    };
    auto eval_on_y = [&](const CurveField& k, const SymPoint& p) {
        CurveFn rhs = k.mul(
            p.x, k.add(k.sub(k.mul(p.x, p.x), k.mul(k.make(Rational(2) * B), p.x)),
                       k.make(B * B - Rational(4) * A)));
        return k.sub(k.mul(p.y, p.y), rhs);
    };

    auto involution_x = [&](const CurveField& k, const SymPoint& p) {
        CurveFn xi = k.div(k.make(A), p.x);
        CurveFn yi = k.div(k.mul(k.make(-A), p.y), k.mul(p.x, p.x));
        return SymPoint{xi, yi};
    };
    auto involution_y = [&](const CurveField& k, const SymPoint& p) {
        CurveFn s = k.make(B * B - Rational(4) * A);
        CurveFn xi = k.div(s, p.x);
        CurveFn yi = k.div(k.mul(k.sub(k.make(MultiPoly(3)), s), p.y), k.mul(p.x, p.x));
        return SymPoint{xi, yi};
    };
    auto phi_hat = [&](const CurveField& k, const SymPoint& p) {
        CurveFn x2 = k.mul(p.x, p.x);
        CurveFn X_ = k.div(k.mul(p.y, p.y), x2);
        CurveFn Y_ = k.div(k.mul(k.sub(x2, k.make(A)), p.y), x2);
        return SymPoint{X_, Y_};
    };
    auto phi = [&](const CurveField& k, const SymPoint& P) {
        CurveFn X2 = k.mul(P.x, P.x);
        CurveFn x_ = k.div(k.mul(P.y, P.y), k.mul(k.make(mp_const(4)), X2));
        CurveFn y_ = k.div(k.mul(P.y, k.add(k.sub(X2, k.make(B * B)),
                                            k.make(Rational(4) * A))),
                           k.mul(k.make(mp_const(8)), X2));
        return SymPoint{x_, y_};
    };
    // duplication on y^2 = x^3 + c2 x^2 + c4 x: lambda = f'(x)/(2y)
    auto duplicate = [&](const CurveField& k, const SymPoint& p, const MultiPoly& c2,
                         const MultiPoly& c4) {
        CurveFn fp = k.add(k.add(k.mul(k.make(mp_const(3)), k.mul(p.x, p.x)),
                                 k.mul(k.make(Rational(2) * c2), p.x)),
                           k.make(c4));
        CurveFn lam = k.div(fp, k.mul(k.make(mp_const(2)), p.y));
        CurveFn x2 = k.sub(k.sub(k.mul(lam, lam), k.make(c2)),
                           k.mul(k.make(mp_const(2)), p.x));
        CurveFn y2 = k.sub(k.mul(lam, k.sub(p.x, x2)), p.y);
        return SymPoint{x2, y2};
    };

    SymPoint jx = involution_x(X, gen);
    cert.involution_x_on_model = X.is_zero(eval_on_x(X, jx));
    SymPoint jjx = involution_x(X, jx);
    cert.involution_x_involutive = X.equal(jjx.x, gen.x) && X.equal(jjx.y, gen.y);
    // fixed locus: numerator of (A/x - x) is A - x^2
    {
        CurveFn diff = X.sub(jx.x, gen.x);
        // diff = (A - x^2)/x as an element with p1 = 0
        CurveFn expect = X.div(X.make(A - x * x), X.make(x));
        cert.involution_x_fixed_locus = X.equal(diff, expect);
    }

    SymPoint img = phi_hat(X, gen);
    cert.phi_hat_image_on_y_model = X.is_zero(eval_on_y(X, img));

    SymPoint img_after_inv = phi_hat(X, jx);
    cert.phi_hat_invariant_under_involution =
        X.equal(img_after_inv.x, img.x) && X.equal(img_after_inv.y, img.y);

    // Y-side generic point
    SymPoint genY{Yf.make(x), Yf.y()};
    SymPoint jy = involution_y(Yf, genY);
    cert.involution_y_on_model = Yf.is_zero(eval_on_y(Yf, jy));
    SymPoint jjy = involution_y(Yf, jy);
    cert.involution_y_involutive = Yf.equal(jjy.x, genY.x) && Yf.equal(jjy.y, genY.y);

    SymPoint back = phi(Yf, genY);
    cert.phi_image_on_x_model = Yf.is_zero(eval_on_x(Yf, back));

    SymPoint back_after_inv = phi(Yf, jy);
    cert.phi_invariant_under_involution_y =
        Yf.equal(back_after_inv.x, back.x) && Yf.equal(back_after_inv.y, back.y);

    // composition phi . phi_hat = [2] on the X-side (c2 = B, c4 = A)
    SymPoint comp = phi(X, phi_hat(X, gen));
    SymPoint dup = duplicate(X, gen, B, A);
    cert.phi_after_phi_hat_is_doubling = X.equal(comp.x, dup.x) && X.equal(comp.y, dup.y);

    // and phi_hat . phi = [2] on the Y-side (c2 = -2B, c4 = B^2 - 4A)
    SymPoint compY = phi_hat(Yf, phi(Yf, genY));
    SymPoint dupY = duplicate(Yf, genY, Rational(-2) * B, B * B - Rational(4) * A);
    cert.phi_hat_after_phi_is_doubling = Yf.equal(compY.x, dupY.x) && Yf.equal(compY.y, dupY.y);

    return cert;
}

}  // namespace sixlines
