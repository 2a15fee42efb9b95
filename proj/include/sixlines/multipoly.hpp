#pragma once

#include <map>
#include <string>
#include <vector>

#include "sixlines/rational.hpp"

namespace sixlines {

// Sparse multivariate polynomial over Q with a fixed number of variables.
// Terms map exponent vectors to nonzero coefficients.
class MultiPoly {
  public:
    using Expo = std::vector<int>;

    explicit MultiPoly(int arity) : arity_(arity) {}
    static MultiPoly constant(int arity, Rational c);
    static MultiPoly variable(int arity, int var, int exp = 1);
    static MultiPoly monomial(int arity, Rational c, Expo e);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Expo, Rational>& terms() const { return terms_; }
    int total_degree() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
    MultiPoly& operator*=(const Rational& s);
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { a *= s; return a; }
    friend MultiPoly operator*(const Rational& s, MultiPoly a) { a *= s; return a; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(int e) const;

    Rational eval(const std::vector<Rational>& point) const;

    // simultaneous substitution: variable i is replaced by images[i], all of a
    // common (possibly different) arity
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

    void add_term(const Expo& e, const Rational& c);

    std::string str(const std::vector<std::string>& names) const;

  private:
    int arity_;
    std::map<Expo, Rational> terms_;
};

}  // namespace sixlines
