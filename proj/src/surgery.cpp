#include "knotsurgery/surgery.hpp"

#include <limits>

namespace knotsurgery {

LinkFamilyMember::LinkFamilyMember(std::int64_t p)
    : LinkFamilyMember(p, KnotExpr::mirror(KnotExpr::torus(2, 3)))
{
}

LinkFamilyMember::LinkFamilyMember(std::int64_t p, KnotExpr companion)
    : p_(p)
    , companion_(std::move(companion))
{
    if (p < 1)
        throw InvalidArgument("family index p must be >= 1");
    if (p == std::numeric_limits<std::int64_t>::max())
        throw InvalidArgument("family index p is too large");
}

SurgerySpec::SurgerySpec(std::int64_t n, LinkFamilyMember member)
    : n_(n)
    , member_(std::move(member))
{
    if (n < 1)
        throw InvalidArgument("E(n) parameter n must be >= 1");
}

LaurentPoly torres_specialize(const LaurentPoly& delta_gamma, std::int64_t lk)
{
    if (lk < 0)
        throw InvalidArgument("torres_specialize: linking number must be >= 0");
    if (delta_gamma.variables().size() != 1)
        throw InvalidArgument("torres_specialize: Delta_Gamma must be a single-variable polynomial");
    const VariableSet& vars = delta_gamma.variables();
    if (lk == 0)
        return LaurentPoly(vars);
    if (lk == 1)
        return delta_gamma;

    std::map<Exponent, Integer> series;
    for (std::int64_t i = 0; i < lk; ++i)
        series.emplace(i, 1);
    return LaurentPoly::univariate(vars[0], series) * delta_gamma;
}

LaurentPoly sw_link_surgery(const SurgerySpec& spec, const LaurentPoly& delta_L)
{
    if (delta_L.variables() != VariableSet{kLinkX, kLinkY})
        throw VariableMismatch("sw_link_surgery: Delta_L must live over {x, y}");
    const VariableSet target{kTK, kTG};
    const LaurentPoly image = substitute(delta_L, target, {{kLinkX, {2, 0}}, {kLinkY, {0, 2}}});
    const LaurentPoly prefactor = LaurentPoly::variable(target, kTK, 1) - LaurentPoly::variable(target, kTK, -1);
    return pow(prefactor, static_cast<std::uint64_t>(spec.n() - 1)) * image;
}

SWResult sw_specialized(const SurgerySpec& spec, const std::optional<LaurentPoly>& delta_L)
{
    const auto& member = spec.member();
    const LaurentPoly delta_gamma = alexander_torus(member.gamma(), kLinkY);
    const LaurentPoly at_x1 = torres_specialize(delta_gamma, member.linking_number());
    const VariableSet tg{kTG};
    const LaurentPoly n1 = substitute(at_x1, tg, {{kLinkY, {2}}});

    SWResult out{member.p(), spec.n(), std::nullopt, spec.n() == 1 ? n1 : LaurentPoly(tg), n1.term_count()};
    if (delta_L)
        out.polynomial = sw_link_surgery(spec, *delta_L);
    return out;
}

std::size_t basic_class_lower_bound(std::int64_t p)
{
    return alexander_torus(LinkFamilyMember(p).gamma()).term_count();
}

} // namespace knotsurgery
