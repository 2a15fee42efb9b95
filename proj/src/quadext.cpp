#include "sixlines/quadext.hpp"

#include <ostream>

namespace sixlines {

QuadExt::QuadExt(Rational base, Rational coeff, long long radicand)
    : base_(std::move(base)), coeff_(std::move(coeff)), d_(radicand) {
    if (!coeff_.is_zero()) {
        if (d_ == 0 || d_ == 1)
            throw std::invalid_argument("QuadExt: radicand must be a squarefree integer != 0,1");
        mpz_class core = squarefree_core(mpz_class(static_cast<long>(d_)));
        if (core != static_cast<long>(d_))
            throw std::invalid_argument("QuadExt: radicand not squarefree");
    }
    normalize();
}

QuadExt QuadExt::sqrt_of(const Rational& r) {
    if (r.is_zero()) return QuadExt(Rational(0));
    // sqrt(p/q) = sqrt(p*q)/q
    mpz_class pq = r.num() * r.den();
    mpz_class sq;
    mpz_class core = squarefree_core(pq, &sq);
    Rational c(mpq_class(sq, r.den()));
    if (core == 1) return QuadExt(c);
    if (!core.fits_slong_p())
        throw std::domain_error("QuadExt: squarefree core does not fit a machine word");
    return QuadExt(Rational(0), c, core.get_si());
}

Rational QuadExt::norm() const {
    return base_ * base_ - Rational(static_cast<long>(d_)) * coeff_ * coeff_;
}

long long QuadExt::merge_radicand(const QuadExt& a, const QuadExt& b) {
    if (a.d_ == 0) return b.d_;
    if (b.d_ == 0 || a.d_ == b.d_) return a.d_;
    throw std::invalid_argument("QuadExt: mixed radicands " + std::to_string(a.d_) + " and " +
                                std::to_string(b.d_));
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    d_ = merge_radicand(*this, o);
    base_ += o.base_;
    coeff_ += o.coeff_;
    normalize();
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    d_ = merge_radicand(*this, o);
    base_ -= o.base_;
    coeff_ -= o.coeff_;
    normalize();
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    long long d = merge_radicand(*this, o);
    Rational nb = base_ * o.base_ + Rational(static_cast<long>(d)) * coeff_ * o.coeff_;
    Rational nc = base_ * o.coeff_ + coeff_ * o.base_;
    base_ = std::move(nb);
    coeff_ = std::move(nc);
    d_ = d;
    normalize();
    return *this;
}

QuadExt QuadExt::inverse() const {
    if (is_zero()) throw std::invalid_argument("QuadExt: inverse of zero");
    Rational n = norm();
    return QuadExt(base_ / n, -coeff_ / n, d_);
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    *this *= o.inverse();
    return *this;
}

bool operator==(const QuadExt& a, const QuadExt& b) {
    if (a.base_ != b.base_ || a.coeff_ != b.coeff_) return false;
    return a.coeff_.is_zero() || a.d_ == b.d_;
}

QuadExt QuadExt::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QuadExt acc(Rational(1));
    QuadExt base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::optional<QuadExt> QuadExt::sqrt_exact(long long field_hint) const {
    if (is_zero()) return QuadExt(Rational(0));
    if (is_rational()) {
        if (auto r = base_.sqrt_exact()) return QuadExt(*r);
        long long d = d_ != 0 ? d_ : field_hint;
        if (d != 0) {
            // base = D*y^2 gives sqrt = y*sqrt(D)
            Rational q = base_ / Rational(static_cast<long>(d));
            if (auto y = q.sqrt_exact()) return QuadExt(Rational(0), *y, d);
        }
        return std::nullopt;
    }
    // (x + y*sqrt(D))^2 = base + coeff*sqrt(D):
    // x^2 + D y^2 = base, 2xy = coeff; x^2,(D y^2) are roots of
    // z^2 - base*z + D*coeff^2/4
    Rational n = norm();
    auto nr = n.sqrt_exact();
    if (!nr) return std::nullopt;
    const Rational half(1, 2);
    for (int s = 0; s < 2; ++s) {
        Rational x2 = (base_ + (s ? -*nr : *nr)) * half;
        auto x = x2.sqrt_exact();
        if (!x || x->is_zero()) continue;
        Rational y = coeff_ / (Rational(2) * *x);
        if (*x * *x + Rational(static_cast<long>(d_)) * y * y == base_)
            return QuadExt(*x, y, d_);
    }
    return std::nullopt;
}

std::string QuadExt::str() const {
    if (is_rational()) return base_.str();
    std::string out;
    if (!base_.is_zero()) out += base_.str();
    if (coeff_.sign() > 0 && !out.empty()) out += "+";
    if (coeff_.is_one()) {
    } else if (coeff_ == Rational(-1)) {
        out += "-";
    } else {
        out += coeff_.str() + "*";
    }
    out += "sqrt(" + std::to_string(d_) + ")";
    return out;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& v) { return os << v.str(); }

}  // namespace sixlines
