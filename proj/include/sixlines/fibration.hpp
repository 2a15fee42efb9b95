#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sixlines/invariants.hpp"
#include "sixlines/unipoly.hpp"

namespace sixlines {

enum class FibrationLabel {
    Natural,        // double-cover model over the pencil through the moduli normal form
    NaturalDual,    // base-fiber dual of the natural fibration
    YAlternate,     // alternate fibration on the double sextic
    XStandard,      // standard fibration on the quartic family
    XAlternate,     // alternate fibration on the quartic family
    XAlternateDual  // base-fiber dual of the X alternate fibration
};
const char* fibration_label_name(FibrationLabel l);
std::optional<FibrationLabel> fibration_label_from_name(const std::string& s);

template <class K>
K scalar_of(long n, long d = 1);
template <>
inline Rational scalar_of<Rational>(long n, long d) { return Rational(n, d); }
template <>
inline QuadExt scalar_of<QuadExt>(long n, long d) { return QuadExt(Rational(n, d)); }

// y^2 = x^3 + a2 x^2 + a4 x + a6 over K[t]
template <class K>
struct WeierstrassModel {
    Poly<K> a2, a4, a6;
    FibrationLabel label;

    Poly<K> short_f() const {
        return a4 - a2 * a2 * scalar_of<K>(1, 3);
    }
    Poly<K> short_g() const {
        return a2 * a2 * a2 * scalar_of<K>(2, 27) - a2 * a4 * scalar_of<K>(1, 3) + a6;
    }
    Poly<K> disc() const {
        Poly<K> f = short_f(), g = short_g();
        return (f * f * f * scalar_of<K>(4) + g * g * scalar_of<K>(27)) * scalar_of<K>(-16);
    }
};

struct KodairaType {
    enum Family { In, InStar, II, III, IV, IVStar, IIIStar, IIStar } family;
    int n = 0;  // for In (n>=1) and In* (n>=0)

    int euler() const;
    std::string name() const;
    friend bool operator==(const KodairaType& a, const KodairaType& b) {
        return a.family == b.family && a.n == b.n;
    }
    friend bool operator<(const KodairaType& a, const KodairaType& b) {
        return a.family != b.family ? a.family < b.family : a.n < b.n;
    }
};
std::optional<KodairaType> kodaira_type_from_name(const std::string& s);

template <class K>
struct KodairaFiber {
    KodairaType type;
    std::optional<Poly<K>> place;  // monic squarefree; nullopt = infinity
    int count;                     // geometric points of the place (its degree, 1 at infinity)
};

template <class K>
struct FiberReport {
    std::vector<KodairaFiber<K>> fibers;
    int euler_sum = 0;
    int two_torsion_order = 1;  // 1, 2, or 4

    std::map<std::string, int> multiset() const {
        std::map<std::string, int> m;
        for (const auto& f : fibers) m[f.type.name()] += f.count;
        return m;
    }
};

// Model builders. Preconditions follow the source constructions; violations throw.
WeierstrassModel<Rational> natural_fibration(const Rational& a, const Rational& b,
                                             const Rational& c, const Rational& d);
WeierstrassModel<Rational> natural_bfdual(const Rational& a, const Rational& b, const Rational& c,
                                          const Rational& d);
WeierstrassModel<Rational> y_alternate(const JInvariants& j);

template <class K>
struct SexticParams {
    K alpha, beta, gamma, delta, epsilon, zeta;
};

template <class K>
WeierstrassModel<K> x_standard(const SexticParams<K>& p);
template <class K>
WeierstrassModel<K> x_alternate(const SexticParams<K>& p);
template <class K>
WeierstrassModel<K> x_alternate_bfdual(const SexticParams<K>& p);

// Kodaira classification per place by vanishing orders of (f, g, Delta);
// throws on a non-minimal place (ord f >= 4 and ord g >= 6).
template <class K>
FiberReport<K> kodaira_classify(const WeierstrassModel<K>& m);

extern template FiberReport<Rational> kodaira_classify(const WeierstrassModel<Rational>&);
extern template FiberReport<QuadExt> kodaira_classify(const WeierstrassModel<QuadExt>&);
extern template WeierstrassModel<Rational> x_standard(const SexticParams<Rational>&);
extern template WeierstrassModel<QuadExt> x_standard(const SexticParams<QuadExt>&);
extern template WeierstrassModel<Rational> x_alternate(const SexticParams<Rational>&);
extern template WeierstrassModel<QuadExt> x_alternate(const SexticParams<QuadExt>&);
extern template WeierstrassModel<Rational> x_alternate_bfdual(const SexticParams<Rational>&);
extern template WeierstrassModel<QuadExt> x_alternate_bfdual(const SexticParams<QuadExt>&);

// Confluence table: predicted fiber multiset (type name -> total geometric count)
// for a recognized (label, stratum) combination; nullopt when no prediction.
struct ConfluenceFlags {
    bool generic = true;
    bool res_ab_zero = false;   // (0b)
    bool tangent = false;       // (1) J4 = 0
    bool disc_a_zero = false;   // (2)
    bool disc_s_zero = false;   // (2b)
    bool cases34 = false;       // (3+4)
    bool case5 = false;         // (5) J4 = J5 = 0
};
std::optional<std::map<std::string, int>> expected_fibers(FibrationLabel label,
                                                          const ConfluenceFlags& flags);

}  // namespace sixlines
