#include "sixlines/genus_two.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sixlines {

RosenhainCurve make_rosenhain(const Rational& l1, const Rational& l2, const Rational& l3) {
    for (const Rational& l : {l1, l2, l3})
        if (l.is_zero() || l.is_one())
            throw std::invalid_argument("RosenhainCurve: lambda in {0,1}");
    if (l1 == l2 || l1 == l3 || l2 == l3)
        throw std::invalid_argument("RosenhainCurve: lambdas must be pairwise distinct");
    return RosenhainCurve{l1, l2, l3};
}

std::array<ProjRoot, 6> sextic_roots(const RosenhainCurve& c) {
    const Rational one(1), zero(0);
    return {ProjRoot{zero, one}, ProjRoot{one, one},  ProjRoot{c.l1, one},
            ProjRoot{c.l2, one}, ProjRoot{c.l3, one}, ProjRoot{one, zero}};
}

namespace {

// 15 partitions of {0..5} into three pairs
const std::vector<std::array<int, 6>>& pair_partitions() {
    static const std::vector<std::array<int, 6>> v = [] {
        std::vector<std::array<int, 6>> out;
        std::array<int, 6> cur{};
        auto rec = [&](auto&& self, std::vector<int> rem, int k) -> void {
            if (rem.empty()) {
                out.push_back(cur);
                return;
            }
            int a = rem[0];
            for (size_t i = 1; i < rem.size(); ++i) {
                int b = rem[i];
                cur[2 * k] = a;
                cur[2 * k + 1] = b;
                std::vector<int> next;
                for (size_t j = 1; j < rem.size(); ++j)
                    if (j != i) next.push_back(rem[j]);
                self(self, next, k + 1);
            }
        };
        rec(rec, {0, 1, 2, 3, 4, 5}, 0);
        return out;
    }();
    return v;
}

// 10 partitions of {0..5} into two unordered triples (the one containing 0 first)
const std::vector<std::array<int, 6>>& triple_partitions() {
    static const std::vector<std::array<int, 6>> v = [] {
        std::vector<std::array<int, 6>> out;
        for (int a = 1; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b) {
                std::array<int, 6> part{0, a, b, 0, 0, 0};
                int k = 3;
                for (int i = 1; i < 6; ++i)
                    if (i != a && i != b) part[k++] = i;
                out.push_back(part);
            }
        return out;
    }();
    return v;
}

Rational tri(const std::array<Rational, 6>& e, int a, int b, int c) {
    Rational d1 = e[a] - e[b], d2 = e[a] - e[c], d3 = e[b] - e[c];
    return d1 * d1 * d2 * d2 * d3 * d3;
}

}  // namespace

IgusaInvariants igusa_clebsch(const std::array<ProjRoot, 6>& roots, unsigned mobius_seed) {
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = i + 1; j < 6; ++j)
            if ((roots[i].u * roots[j].v - roots[j].u * roots[i].v).is_zero())
                throw std::invalid_argument("igusa_clebsch: repeated root");

    // Mobius x -> (p x + q)/(r x + s): the binary sextic pulls back to the product
    // of the linear forms v_i (p x + q) - u_i (r x + s); pick the first map from a
    // deterministic sequence that keeps every root finite.
    Rational p, q, r, s;
    std::array<Rational, 6> xs;
    Rational lead(1);
    for (unsigned attempt = 0;; ++attempt) {
        unsigned t = mobius_seed + attempt;
        p = Rational(static_cast<long>(3 + 2 * t));
        q = Rational(static_cast<long>(1 + t % 5));
        r = Rational(1);
        s = Rational(static_cast<long>(2 + (t * 7) % 11));
        if ((p * s - q * r).is_zero()) continue;
        bool ok = true;
        lead = Rational(1);
        for (int i = 0; i < 6 && ok; ++i) {
            Rational ll = roots[i].v * p - roots[i].u * r;
            if (ll.is_zero()) { ok = false; break; }
            lead *= ll;
            xs[i] = -(roots[i].v * q - roots[i].u * s) / ll;
        }
        if (ok) break;
    }

    const Rational a2 = lead * lead;
    IgusaInvariants out{Rational(0), Rational(0), Rational(0), Rational(0)};

    for (const auto& pp : pair_partitions()) {
        Rational d1 = xs[pp[0]] - xs[pp[1]];
        Rational d2 = xs[pp[2]] - xs[pp[3]];
        Rational d3 = xs[pp[4]] - xs[pp[5]];
        out.i2 += d1 * d1 * d2 * d2 * d3 * d3;
    }
    out.i2 *= a2;

    for (const auto& tp : triple_partitions())
        out.i4 += tri(xs, tp[0], tp[1], tp[2]) * tri(xs, tp[3], tp[4], tp[5]);
    out.i4 *= a2 * a2;

    for (const auto& tp : triple_partitions()) {
        std::array<int, 3> bs{tp[3], tp[4], tp[5]};
        std::sort(bs.begin(), bs.end());
        do {
            Rational cross(1);
            for (int k = 0; k < 3; ++k) {
                Rational d = xs[tp[k]] - xs[bs[k]];
                cross *= d * d;
            }
            out.i6 += tri(xs, tp[0], tp[1], tp[2]) * tri(xs, tp[3], tp[4], tp[5]) * cross;
        } while (std::next_permutation(bs.begin(), bs.end()));
    }
    out.i6 *= a2 * a2 * a2;

    out.i10 = Rational(1);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            Rational d = xs[i] - xs[j];
            out.i10 *= d * d;
        }
    out.i10 *= a2 * a2 * a2 * a2 * a2;
    return out;
}

WeightedPoint<Rational> igusa_moduli_point(const IgusaInvariants& ic) {
    return WeightedPoint<Rational>(
        {ic.i4 * Rational(1, 4), (ic.i2 * ic.i4 - Rational(3) * ic.i6) * Rational(1, 8),
         Rational(0), ic.i10 * Rational(-243, 4), ic.i2 * ic.i10 * Rational(243, 32)},
        {2, 3, 4, 5, 6});
}

RestrictionReport restriction_check(const RosenhainCurve& c) {
    Configuration cfg = from_rosenhain(c.l1, c.l2, c.l3);
    DOCoordinates d = do_coordinates(cfg);
    JInvariants j = j_invariants(satake_from_t(d.t));
    IgusaInvariants ic = igusa_clebsch(sextic_roots(c));

    RestrictionReport rep{};
    rep.r_zero = d.r.is_zero();
    rep.j4_zero = j.j4.is_zero();
    rep.j = j;
    rep.igusa = ic;
    rep.weighted_equal_ok = weighted_equal(j.as_weighted_point(), igusa_moduli_point(ic));
    return rep;
}

}  // namespace sixlines
