#include "sixlines/configuration.hpp"

#include <stdexcept>

namespace sixlines {

namespace {

// the ten complementary-minor index pairs, in t1..t10 order
constexpr int kTPairs[10][2][3] = {
    {{1, 3, 5}, {2, 4, 6}}, {{1, 4, 5}, {2, 3, 6}}, {{1, 4, 6}, {2, 3, 5}},
    {{1, 3, 6}, {2, 4, 5}}, {{1, 2, 5}, {3, 4, 6}}, {{1, 2, 6}, {3, 4, 5}},
    {{1, 3, 4}, {2, 5, 6}}, {{1, 2, 4}, {3, 5, 6}}, {{1, 5, 6}, {2, 3, 4}},
    {{1, 2, 3}, {4, 5, 6}},
};

// the fifteen linear relations among t1..t10, as signed index lists (1-based)
constexpr int kRelations[15][4][2] = {
    {{1, 1}, {-1, 2}, {-1, 5}, {-1, 9}},  {{1, 1}, {-1, 2}, {-1, 6}, {-1, 7}},
    {{1, 1}, {-1, 3}, {-1, 5}, {-1, 10}}, {{1, 1}, {-1, 3}, {-1, 6}, {-1, 8}},
    {{1, 1}, {-1, 4}, {-1, 7}, {-1, 10}}, {{1, 1}, {-1, 4}, {-1, 8}, {-1, 9}},
    {{1, 2}, {-1, 3}, {1, 7}, {-1, 8}},   {{1, 2}, {-1, 3}, {1, 9}, {-1, 10}},
    {{1, 2}, {-1, 4}, {1, 5}, {-1, 8}},   {{1, 2}, {-1, 4}, {1, 6}, {-1, 10}},
    {{1, 3}, {-1, 4}, {1, 5}, {-1, 7}},   {{1, 3}, {-1, 4}, {1, 6}, {-1, 9}},
    {{1, 5}, {-1, 6}, {-1, 7}, {1, 9}},   {{1, 5}, {-1, 6}, {-1, 8}, {1, 10}},
    {{1, 7}, {-1, 8}, {-1, 9}, {1, 10}},
};

// fixed loci of the fifteen Disc(S) components: each row is three equalities
// t[a] = s*t[b] with s = +-1 (indices 1-based)
struct ComponentEq {
    int a, b, sign;
};
constexpr ComponentEq kComponents[15][3] = {
    {{1, 2, 1}, {5, 9, -1}, {6, 7, -1}},   {{1, 3, 1}, {5, 10, -1}, {6, 8, -1}},
    {{1, 4, 1}, {7, 10, -1}, {8, 9, -1}},  {{1, 5, 1}, {2, 9, -1}, {3, 10, -1}},
    {{1, 6, 1}, {2, 7, -1}, {3, 8, -1}},   {{1, 7, 1}, {2, 6, -1}, {4, 10, -1}},
    {{1, 8, 1}, {3, 6, -1}, {4, 9, -1}},   {{1, 9, 1}, {2, 5, -1}, {4, 8, -1}},
    {{1, 10, 1}, {3, 5, -1}, {4, 7, -1}},  {{2, 3, 1}, {7, 8, 1}, {9, 10, 1}},
    {{2, 4, 1}, {5, 8, 1}, {6, 10, 1}},    {{2, 8, 1}, {3, 7, 1}, {4, 5, 1}},
    {{2, 10, 1}, {3, 9, 1}, {4, 6, 1}},    {{3, 4, 1}, {5, 7, 1}, {6, 9, 1}},
    {{5, 6, 1}, {7, 9, 1}, {8, 10, 1}},
};

Rational det3(const Configuration& c, int i, int j, int k) {
    const auto& u = c.lines[i - 1].coeffs;
    const auto& v = c.lines[j - 1].coeffs;
    const auto& w = c.lines[k - 1].coeffs;
    return u[0] * (v[1] * w[2] - v[2] * w[1]) - v[0] * (u[1] * w[2] - u[2] * w[1]) +
           w[0] * (u[1] * v[2] - u[2] * v[1]);
}

}  // namespace

bool Line::same_line(const Line& o) const {
    // rank of the 2x3 coefficient matrix below 2
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!(coeffs[i] * o.coeffs[j] - coeffs[j] * o.coeffs[i]).is_zero()) return false;
    return true;
}

const char* stratum_name(StratumCase c) {
    switch (c) {
        case StratumCase::Generic: return "generic(0)";
        case StratumCase::TangentConic: return "tangent-conic(1)";
        case StratumCase::ThreeConcurrent: return "three-concurrent(2)";
        case StratumCase::TwoVanish: return "two-vanish(3)";
        case StratumCase::ThreeVanish: return "three-vanish(4)";
        case StratumCase::Mixed: return "mixed(5)";
        case StratumCase::FourConcurrentOrDoubleLine: return "four-concurrent-or-double-line(6)";
        case StratumCase::OtherDegenerate: return "other-degenerate";
    }
    return "?";
}

bool RelationReport::all_ok() const {
    for (bool b : linear_ok)
        if (!b) return false;
    return r_identity_ok;
}

Configuration from_moduli(const Rational& a, const Rational& b, const Rational& c,
                          const Rational& d) {
    Configuration cfg;
    const Rational z(0), o(1);
    cfg.lines = {Line{{o, z, z}}, Line{{z, o, z}}, Line{{z, z, o}},
                 Line{{o, o, o}}, Line{{o, a, b}}, Line{{o, c, d}}};
    cfg.moduli = ModuliProvenance{{a, b, c, d}};
    return cfg;
}

Configuration from_rosenhain(const Rational& l1, const Rational& l2, const Rational& l3) {
    const std::array<Rational, 3> ls{l1, l2, l3};
    for (const auto& l : ls)
        if (l.is_zero() || l.is_one())
            throw std::invalid_argument("from_rosenhain: lambda in {0,1}");
    if (l1 == l2 || l1 == l3 || l2 == l3)
        throw std::invalid_argument("from_rosenhain: lambdas must be pairwise distinct");
    Configuration cfg;
    const Rational z(0), o(1);
    cfg.lines[0] = Line{{o, z, z}};
    cfg.lines[1] = Line{{z, o, z}};
    cfg.lines[2] = Line{{o, o, Rational(-1)}};
    for (int i = 0; i < 3; ++i) cfg.lines[3 + i] = Line{{ls[i] * ls[i], o, -ls[i]}};
    cfg.rosenhain = RosenhainProvenance{ls};
    return cfg;
}

Configuration from_lines(const std::array<Line, 6>& lines) {
    for (const Line& l : lines)
        if (!l.is_valid()) throw std::invalid_argument("from_lines: zero line");
    Configuration cfg;
    cfg.lines = lines;
    return cfg;
}

Rational plucker(const Configuration& c, int i, int j, int k) {
    if (!(1 <= i && i < j && j < k && k <= 6))
        throw std::invalid_argument("plucker: need 1 <= i < j < k <= 6");
    return det3(c, i, j, k);
}

DOCoordinates do_coordinates(const Configuration& c) {
    DOCoordinates d;
    for (int n = 0; n < 10; ++n) {
        const auto& p = kTPairs[n];
        d.t[n] = det3(c, p[0][0], p[0][1], p[0][2]) * det3(c, p[1][0], p[1][1], p[1][2]);
    }
    d.r = det3(c, 1, 2, 3) * det3(c, 1, 4, 5) * det3(c, 2, 4, 6) * det3(c, 3, 5, 6) -
          det3(c, 1, 2, 4) * det3(c, 1, 3, 5) * det3(c, 2, 3, 6) * det3(c, 4, 5, 6);
    return d;
}

RelationReport verify_relations(const DOCoordinates& d) {
    RelationReport rep{};
    for (int n = 0; n < 15; ++n) {
        Rational acc(0);
        for (const auto& [s, idx] : kRelations[n]) acc += Rational(s) * d.t[idx - 1];
        rep.linear_ok[n] = acc.is_zero();
    }
    Rational s2(0), s4(0);
    for (const auto& ti : d.t) {
        Rational q = ti * ti;
        s2 += q;
        s4 += q * q;
    }
    rep.r_identity_ok = Rational(12) * d.r * d.r == s2 * s2 - Rational(4) * s4;
    return rep;
}

Stratum classify(const Configuration& c) {
    DOCoordinates d = do_coordinates(c);
    Stratum s;
    for (int i = 0; i < 10; ++i)
        if (d.t[i].is_zero()) s.vanishing_t_indices.insert(i + 1);
    s.r_is_zero = d.r.is_zero();
    const size_t z = s.vanishing_t_indices.size();
    for (int i = 0; i < 6 && !s.has_double_line; ++i)
        for (int j = i + 1; j < 6 && !s.has_double_line; ++j)
            if (c.lines[i].same_line(c.lines[j])) s.has_double_line = true;

    if (z == 0) {
        s.status = s.r_is_zero ? StratumCase::TangentConic : StratumCase::Generic;
    } else if (z <= 3 && s.r_is_zero) {
        s.status = StratumCase::Mixed;
    } else if (z == 1) {
        s.status = StratumCase::ThreeConcurrent;
    } else if (z == 2) {
        s.status = StratumCase::TwoVanish;
    } else if (z == 3) {
        s.status = StratumCase::ThreeVanish;
    } else if (z == 4 && s.r_is_zero) {
        s.status = StratumCase::FourConcurrentOrDoubleLine;
    } else {
        s.status = StratumCase::OtherDegenerate;
    }
    return s;
}

Configuration permute(const Configuration& c, const std::array<int, 6>& sigma) {
    std::array<bool, 6> seen{};
    for (int v : sigma) {
        if (v < 1 || v > 6) throw std::invalid_argument("permute: entries must be 1..6");
        if (seen[v - 1]) throw std::invalid_argument("permute: not a bijection");
        seen[v - 1] = true;
    }
    Configuration out;
    for (int i = 0; i < 6; ++i) out.lines[i] = c.lines[sigma[i] - 1];
    return out;
}

DOCoordinates associate(const DOCoordinates& d) { return DOCoordinates{d.t, -d.r}; }

std::set<int> discriminant_components(const DOCoordinates& d) {
    std::set<int> out;
    for (int j = 0; j < 15; ++j) {
        bool all = true;
        for (const auto& eq : kComponents[j])
            all = all && d.t[eq.a - 1] == Rational(eq.sign) * d.t[eq.b - 1];
        if (all) out.insert(j + 1);
    }
    return out;
}

}  // namespace sixlines
