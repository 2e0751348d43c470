#pragma once

#include <cstdint>
#include <optional>

#include "knotsurgery/knot.hpp"
#include "knotsurgery/laurent.hpp"

namespace knotsurgery {

/// Variable names used by the invariants of X_p.
inline constexpr const char* kLinkX = "x";
inline constexpr const char* kLinkY = "y";
inline constexpr const char* kTK = "t_K";
inline constexpr const char* kTG = "t_G";

/// The two-component link L_p = K u Gamma_p: K is the (left-handed) trefoil,
/// Gamma_p is isotopic to T(p, p + 1) and links K once.
class LinkFamilyMember {
public:
    explicit LinkFamilyMember(std::int64_t p);
    LinkFamilyMember(std::int64_t p, KnotExpr companion);

    std::int64_t p() const { return p_; }
    const KnotExpr& companion_knot() const { return companion_; }
    TorusKnotSpec gamma() const { return TorusKnotSpec(p_, p_ + 1); }
    std::int64_t linking_number() const { return 1; }

private:
    std::int64_t p_;
    KnotExpr companion_;
};

/// X_p = E(n, 1; L_p).
class SurgerySpec {
public:
    SurgerySpec(std::int64_t n, LinkFamilyMember member);

    std::int64_t n() const { return n_; }
    const LinkFamilyMember& member() const { return member_; }

private:
    std::int64_t n_;
    LinkFamilyMember member_;
};

struct SWResult {
    std::int64_t p;
    std::int64_t n;
    /// Full SW polynomial over {t_K, t_G}; only known when Delta_L is supplied.
    std::optional<LaurentPoly> polynomial;
    /// SW at t_K = 1, over {t_G}.
    LaurentPoly specialization_at_tK1;
    /// Support size of the n = 1 specialization.
    std::size_t basic_class_lower_bound;
};

/// Delta_L(1, y) = ((y^lk - 1) / (y - 1)) * Delta_Gamma(y), with the
/// quotient expanded as the geometric sum 1 + y + ... + y^(lk-1).
LaurentPoly torres_specialize(const LaurentPoly& delta_gamma, std::int64_t lk);

/// SW(X) = (t_K - t_K^-1)^(n-1) * Delta_L(t_K^2, t_G^2) for Delta_L over {x, y}.
LaurentPoly sw_link_surgery(const SurgerySpec& spec, const LaurentPoly& delta_L);

/// The t_K = 1 specialization of SW(X_p) together with the basic-class
/// lower bound. `delta_L`, when given, fills in the full polynomial.
SWResult sw_specialized(const SurgerySpec& spec, const std::optional<LaurentPoly>& delta_L = std::nullopt);

/// Number of nonzero terms of Delta_{T(p, p+1)}.
std::size_t basic_class_lower_bound(std::int64_t p);

} // namespace knotsurgery
