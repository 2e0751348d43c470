#pragma once

#include <string>

#include <json.hpp>

#include "knotsurgery/family.hpp"
#include "knotsurgery/laurent.hpp"
#include "knotsurgery/surgery.hpp"

namespace knotsurgery {

using Json = nlohmann::ordered_json;

/// {variables: [...], terms: [{exps: [...], coeff: "decimal"}]}, terms in
/// descending lexicographic exponent order.
Json to_json(const LaurentPoly& a);
LaurentPoly poly_from_json(const Json& j);

/// {p, n, specialization, lower_bound, full_polynomial | "unavailable"}
Json to_json(const SWResult& r);

Json to_json(const FamilyReport& r);
/// Header: p,lower_bound,lemma63_ok,genus,span,delta_gamma
std::string to_csv(const FamilyReport& r);

Json to_json(const UnboundednessCertificate& c);
/// Throws ParseError on schema violations (wrong version, missing fields).
UnboundednessCertificate certificate_from_json(const Json& j);

} // namespace knotsurgery
