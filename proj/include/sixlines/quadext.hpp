#pragma once

#include <optional>
#include <string>

#include "sixlines/rational.hpp"

namespace sixlines {

// Element base + coeff*sqrt(D) of a quadratic field Q(sqrt(D)).
// D is a squarefree integer != 0,1, fixed per value; D == 0 marks a plain
// rational (member of every Q(sqrt(D))). Arithmetic between two genuinely
// different radicands is a hard error, not a coercion.
class QuadExt {
  public:
    QuadExt() : base_(0), coeff_(0), d_(0) {}
    QuadExt(Rational r) : base_(std::move(r)), coeff_(0), d_(0) {}
    QuadExt(int n) : base_(n), coeff_(0), d_(0) {}
    QuadExt(long n) : base_(n), coeff_(0), d_(0) {}
    QuadExt(Rational base, Rational coeff, long long radicand);

    // sqrt of a rational as an element of Q(sqrt(core)); exact
    static QuadExt sqrt_of(const Rational& r);

    const Rational& base() const { return base_; }
    const Rational& coeff() const { return coeff_; }
    long long radicand() const { return d_; }

    bool is_rational() const { return coeff_.is_zero(); }
    bool is_zero() const { return base_.is_zero() && coeff_.is_zero(); }
    bool is_one() const { return base_.is_one() && coeff_.is_zero(); }

    QuadExt conjugate() const { return QuadExt(base_, -coeff_, d_); }
    Rational norm() const;   // base^2 - D*coeff^2
    Rational trace() const { return base_ + base_; }

    QuadExt operator-() const { return QuadExt(-base_, -coeff_, d_); }
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt a, const QuadExt& b) { a += b; return a; }
    friend QuadExt operator-(QuadExt a, const QuadExt& b) { a -= b; return a; }
    friend QuadExt operator*(QuadExt a, const QuadExt& b) { a *= b; return a; }
    friend QuadExt operator/(QuadExt a, const QuadExt& b) { a /= b; return a; }

    friend bool operator==(const QuadExt& a, const QuadExt& b);
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

    QuadExt inverse() const;
    QuadExt pow(long e) const;
    // square root inside Q(sqrt(D)), if any; rational values carry no radicand of
    // their own, so the ambient field may be supplied as a hint
    std::optional<QuadExt> sqrt_exact(long long field_hint = 0) const;
    bool is_square() const { return sqrt_exact().has_value(); }

    std::string str() const;

  private:
    void normalize() { if (coeff_.is_zero()) d_ = 0; }
    static long long merge_radicand(const QuadExt& a, const QuadExt& b);

    Rational base_, coeff_;
    long long d_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& v);

}  // namespace sixlines
