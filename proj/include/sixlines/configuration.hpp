#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>

#include "sixlines/rational.hpp"

namespace sixlines {

// a*z1 + b*z2 + c*z3 = 0, projective (scalar multiples identified)
struct Line {
    std::array<Rational, 3> coeffs;

    bool is_valid() const {
        return !(coeffs[0].is_zero() && coeffs[1].is_zero() && coeffs[2].is_zero());
    }
    bool same_line(const Line& o) const;
};

struct ModuliProvenance {
    std::array<Rational, 4> abcd;
};
struct RosenhainProvenance {
    std::array<Rational, 3> lambda;
};

// Ordered configuration of six lines in the plane, the 3x6 coefficient matrix.
struct Configuration {
    std::array<Line, 6> lines;
    std::optional<ModuliProvenance> moduli;
    std::optional<RosenhainProvenance> rosenhain;
};

// Dolgachev-Ortland coordinates: ten degree-one t's plus the degree-two R.
struct DOCoordinates {
    std::array<Rational, 10> t;
    Rational r;
};

enum class StratumCase {
    Generic,                     // (0) all t nonzero, R != 0
    TangentConic,                // (1) all t nonzero, R == 0
    ThreeConcurrent,             // (2) exactly one t zero
    TwoVanish,                   // (3) exactly two
    ThreeVanish,                 // (4) exactly three
    Mixed,                       // (5) 1..3 zero and R == 0
    FourConcurrentOrDoubleLine,  // (6) exactly four zero and R == 0
    OtherDegenerate,
};

struct Stratum {
    StratumCase status;
    std::set<int> vanishing_t_indices;  // 1-based
    bool r_is_zero = false;
    bool has_double_line = false;  // distinguishes (6b) from (6a)
};

const char* stratum_name(StratumCase c);

struct RelationReport {
    std::array<bool, 15> linear_ok;
    bool r_identity_ok;
    bool all_ok() const;
};

Configuration from_moduli(const Rational& a, const Rational& b, const Rational& c,
                          const Rational& d);

// six lines tangent to the conic z3^2 - 4 z1 z2 = 0; lambdas distinct, not 0 or 1
Configuration from_rosenhain(const Rational& l1, const Rational& l2, const Rational& l3);

Configuration from_lines(const std::array<Line, 6>& lines);

// det of columns i,j,k (1-based, i<j<k)
Rational plucker(const Configuration& c, int i, int j, int k);

DOCoordinates do_coordinates(const Configuration& c);

RelationReport verify_relations(const DOCoordinates& d);

Stratum classify(const Configuration& c);

// columns reordered: line i of the result is line sigma[i] of the input
Configuration permute(const Configuration& c, const std::array<int, 6>& sigma);

// association involution on coordinates: (t, R) -> (t, -R)
DOCoordinates associate(const DOCoordinates& d);

// indices j in 1..15 whose three defining t-equalities hold (components of Disc(S)=0)
std::set<int> discriminant_components(const DOCoordinates& d);

}  // namespace sixlines
