#include <doctest.h>

#include <random>

#include "sixlines/multipoly.hpp"

using namespace sixlines;

namespace {
MultiPoly rnd_poly(std::mt19937_64& rng, int arity, int nterms, int max_exp = 3) {
    std::uniform_int_distribution<long> coef(-9, 9);
    std::uniform_int_distribution<int> expo(0, max_exp);
    MultiPoly p(arity);
    for (int i = 0; i < nterms; ++i) {
        MultiPoly::Expo e(arity);
        for (auto& v : e) v = expo(rng);
        p.add_term(e, Rational(coef(rng)));
    }
    return p;
}
}  // namespace

TEST_CASE("ring axioms on random sparse polynomials") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 80; ++i) {
        MultiPoly a = rnd_poly(rng, 3, 4), b = rnd_poly(rng, 3, 4), c = rnd_poly(rng, 3, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + MultiPoly(3) == a);
        CHECK(a * MultiPoly::constant(3, Rational(1)) == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("no zero terms stored") {
    MultiPoly p(2);
    p.add_term({1, 1}, Rational(3));
    p.add_term({1, 1}, Rational(-3));
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
}

TEST_CASE("evaluation agrees with substitution by constants") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 40; ++i) {
        MultiPoly p = rnd_poly(rng, 3, 5);
        std::uniform_int_distribution<long> v(-5, 5);
        std::vector<Rational> pt{Rational(v(rng)), Rational(v(rng)), Rational(v(rng))};
        std::vector<MultiPoly> consts;
        for (const auto& x : pt) consts.push_back(MultiPoly::constant(1, x));
        MultiPoly sub = p.substitute(consts);
        Rational direct = p.eval(pt);
        if (direct.is_zero())
            CHECK(sub.is_zero());
        else
            CHECK(sub == MultiPoly::constant(1, direct));
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 30; ++i) {
        MultiPoly a = rnd_poly(rng, 2, 4, 2), b = rnd_poly(rng, 2, 4, 2);
        std::vector<MultiPoly> im{rnd_poly(rng, 2, 3, 2), rnd_poly(rng, 2, 3, 2)};
        CHECK((a * b).substitute(im) == a.substitute(im) * b.substitute(im));
        CHECK((a + b).substitute(im) == a.substitute(im) + b.substitute(im));
    }
}

TEST_CASE("powers and total degree") {
    MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    MultiPoly p = x + y;
    CHECK(p.pow(2) == x * x + Rational(2) * x * y + y * y);
    CHECK(p.pow(0) == MultiPoly::constant(2, Rational(1)));
    CHECK((x * y * y).total_degree() == 3);
    CHECK(MultiPoly(2).total_degree() == -1);
}
