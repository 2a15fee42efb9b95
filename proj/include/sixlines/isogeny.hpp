#pragma once

#include <optional>
#include <utility>

#include "sixlines/multipoly.hpp"
#include "sixlines/quadext.hpp"
#include "sixlines/unipoly.hpp"

namespace sixlines {

// point of a fiber y^2 = x (x^2 + B(t) x + A(t)) at base value t;
// absent coordinates mark the section at infinity
template <class K>
struct FiberPoint {
    K t;
    std::optional<std::pair<K, K>> xy;

    bool at_infinity() const { return !xy.has_value(); }
    static FiberPoint infinity(K t) { return {std::move(t), std::nullopt}; }
};

// fiberwise translation by the two-torsion section (x,y) -> (A/x, -A y / x^2);
// exchanges the zero section and the two-torsion section
template <class K>
FiberPoint<K> vgs_involution_x(const Poly<K>& A, const Poly<K>& B, const FiberPoint<K>& p);

// degree-two quotient map onto Y^2 = X (X^2 - 2B X + B^2 - 4A)
template <class K>
FiberPoint<K> isogeny_phi_hat(const Poly<K>& A, const Poly<K>& B, const FiberPoint<K>& p);

// dual map back to the x-model
template <class K>
FiberPoint<K> isogeny_phi(const Poly<K>& A, const Poly<K>& B, const FiberPoint<K>& P);

template <class K>
bool on_x_model(const Poly<K>& A, const Poly<K>& B, const FiberPoint<K>& p);
template <class K>
bool on_y_model(const Poly<K>& A, const Poly<K>& B, const FiberPoint<K>& p);

extern template FiberPoint<Rational> vgs_involution_x(const RatPoly&, const RatPoly&,
                                                      const FiberPoint<Rational>&);
extern template FiberPoint<Rational> isogeny_phi_hat(const RatPoly&, const RatPoly&,
                                                     const FiberPoint<Rational>&);
extern template FiberPoint<Rational> isogeny_phi(const RatPoly&, const RatPoly&,
                                                 const FiberPoint<Rational>&);
extern template bool on_x_model(const RatPoly&, const RatPoly&, const FiberPoint<Rational>&);
extern template bool on_y_model(const RatPoly&, const RatPoly&, const FiberPoint<Rational>&);

// Symbolic certificates with A, B indeterminate: each identity is proved by
// exact reduction in the function field of the generic fiber.
struct IsogenyCertificate {
    bool involution_x_on_model;
    bool involution_x_involutive;
    bool involution_x_fixed_locus;  // fixed points cut out by x^2 = A
    bool phi_hat_image_on_y_model;
    bool phi_hat_invariant_under_involution;
    bool involution_y_on_model;
    bool involution_y_involutive;
    bool phi_image_on_x_model;
    bool phi_invariant_under_involution_y;
    bool phi_after_phi_hat_is_doubling;
    bool phi_hat_after_phi_is_doubling;
    bool all_ok() const;
};

IsogenyCertificate verify_isogeny_symbolic();

}  // namespace sixlines
