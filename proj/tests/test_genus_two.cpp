#include <doctest.h>

#include <map>
#include <random>

#include "sixlines/fibration.hpp"
#include "sixlines/genus_two.hpp"

using namespace sixlines;

namespace {
Rational rnd(std::mt19937_64& rng, long bound = 10) {
    std::uniform_int_distribution<long> num(-bound, bound), den(1, 4);
    return Rational(num(rng), den(rng));
}
RosenhainCurve rnd_curve(std::mt19937_64& rng) {
    Rational l1, l2, l3;
    do {
        l1 = rnd(rng);
        l2 = rnd(rng);
        l3 = rnd(rng);
    } while (l1.is_zero() || l2.is_zero() || l3.is_zero() || l1.is_one() || l2.is_one() ||
             l3.is_one() || l1 == l2 || l1 == l3 || l2 == l3);
    return make_rosenhain(l1, l2, l3);
}
}  // namespace

TEST_CASE("curve validation and roots") {
    CHECK_THROWS_AS(make_rosenhain(Rational(2), Rational(3), Rational(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_rosenhain(Rational(0), Rational(3), Rational(5)),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_rosenhain(Rational(2), Rational(1), Rational(5)),
                    std::invalid_argument);

    auto roots = sextic_roots(make_rosenhain(Rational(2), Rational(3), Rational(5)));
    CHECK(roots[0].u == Rational(0));
    CHECK(roots[1].u == Rational(1));
    CHECK(roots[2].u == Rational(2));
    CHECK(roots[3].u == Rational(3));
    CHECK(roots[4].u == Rational(5));
    CHECK(roots[5].v == Rational(0));  // the point at infinity
}

TEST_CASE("igusa invariants reject repeated roots") {
    std::array<ProjRoot, 6> bad{ProjRoot{Rational(0), Rational(1)},
                                ProjRoot{Rational(0), Rational(1)},
                                ProjRoot{Rational(2), Rational(1)},
                                ProjRoot{Rational(3), Rational(1)},
                                ProjRoot{Rational(5), Rational(1)},
                                ProjRoot{Rational(1), Rational(0)}};
    CHECK_THROWS_AS(igusa_clebsch(bad), std::invalid_argument);
}

TEST_CASE("Mobius covariance as a weighted point") {
    auto roots = sextic_roots(make_rosenhain(Rational(2), Rational(3), Rational(5)));
    IgusaInvariants a = igusa_clebsch(roots, 0);
    IgusaInvariants b = igusa_clebsch(roots, 1);
    IgusaInvariants c = igusa_clebsch(roots, 7);
    CHECK(weighted_equal(a.as_weighted_point(), b.as_weighted_point()));
    CHECK(weighted_equal(a.as_weighted_point(), c.as_weighted_point()));
    CHECK_FALSE(a.i10.is_zero());

    // permutation invariance of the roots
    std::array<ProjRoot, 6> perm{roots[3], roots[0], roots[5], roots[2], roots[4], roots[1]};
    IgusaInvariants d = igusa_clebsch(perm, 0);
    CHECK(weighted_equal(a.as_weighted_point(), d.as_weighted_point()));
}

TEST_CASE("restriction identity at the sample curve") {
    auto rep = restriction_check(make_rosenhain(Rational(2), Rational(3), Rational(5)));
    CHECK(rep.r_zero);
    CHECK(rep.j4_zero);
    CHECK(rep.weighted_equal_ok);
    CHECK(rep.all_ok());
    // frozen values of the configuration route at (2,3,5)
    CHECK(rep.j.j2 == Rational(2068));
    CHECK(rep.j.j3 == Rational(44000));
    CHECK(rep.j.j5 == Rational(-125971200));
    CHECK(rep.j.j6 == Rational(8660520000));
}

TEST_CASE("restriction identity on more sample curves") {
    for (auto [l1, l2, l3] : {std::array<long, 3>{2, 3, 7}, {3, 5, 7}, {-1, 2, 4}}) {
        auto rep = restriction_check(
            make_rosenhain(Rational(l1), Rational(l2), Rational(l3)));
        CHECK(rep.all_ok());
    }
    std::mt19937_64 rng(103);
    for (int i = 0; i < 20; ++i) {
        auto rep = restriction_check(rnd_curve(rng));
        CHECK(rep.r_zero);
        CHECK(rep.j4_zero);
        CHECK(rep.weighted_equal_ok);
    }
}

TEST_CASE("tangent configurations give the special alternate fiber pattern") {
    // the alternate fibration of the double sextic degenerates to 6 I2 + I5* + I1
    JInvariants j = j_invariants_of(from_rosenhain(Rational(2), Rational(3), Rational(5)));
    auto rep = kodaira_classify(y_alternate(j));
    std::map<std::string, int> expect{{"I2", 6}, {"I5*", 1}, {"I1", 1}};
    CHECK(rep.multiset() == expect);
    CHECK(rep.euler_sum == 24);
    CHECK(rep.two_torsion_order == 2);
}
