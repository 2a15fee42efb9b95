#include <doctest.h>

#include <random>

#include "sixlines/rational.hpp"

using namespace sixlines;

namespace {
Rational rnd(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
    return Rational(num(rng), den(rng));
}
}  // namespace

TEST_CASE("rational normal form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(-3, 6).den() == 2);
    CHECK(Rational(-3, 6).num() == -1);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("5/10").value() == Rational(1, 2));
    CHECK(Rational::parse("-7").value() == Rational(-7));
    CHECK(Rational::parse("22/7").value().str() == "22/7");
    CHECK(Rational(-4, 2).str() == "-2");
    CHECK_FALSE(Rational::parse("1/0").has_value());
    CHECK_FALSE(Rational::parse("x").has_value());
    CHECK_FALSE(Rational::parse("1/-2").has_value());
    CHECK_FALSE(Rational::parse("").has_value());
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        Rational a = rnd(rng), b = rnd(rng), c = rnd(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rational(0) == a);
        CHECK(a * Rational(1) == a);
        CHECK(a + (-a) == Rational(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
}

TEST_CASE("powers and square roots") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(0).pow(0) == Rational(1));
    CHECK(Rational(9, 4).sqrt_exact().value() == Rational(3, 2));
    CHECK_FALSE(Rational(2).sqrt_exact().has_value());
    CHECK_FALSE(Rational(-4).sqrt_exact().has_value());
    CHECK(Rational(170061120).is_square() == false);
}

TEST_CASE("squarefree core extraction") {
    mpz_class sq;
    CHECK(squarefree_core(mpz_class(4), &sq) == 1);
    CHECK(sq == 2);
    CHECK(squarefree_core(mpz_class(-18), &sq) == -2);
    CHECK(sq == 3);
    CHECK(squarefree_core(mpz_class(170061120), &sq) == 5);
    CHECK(sq == 5832);  // 2^3 * 3^6
    CHECK(squarefree_core(mpz_class(1)) == 1);
    CHECK_THROWS_AS(squarefree_core(mpz_class(0)), std::invalid_argument);
}
