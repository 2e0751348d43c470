#include "knotsurgery/json_io.hpp"

#include <sstream>

namespace knotsurgery {

Json to_json(const LaurentPoly& a)
{
    Json terms = Json::array();
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it)
        terms.push_back({{"exps", it->first}, {"coeff", it->second.str()}});
    return {{"variables", a.variables().names()}, {"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const Json& j)
{
    try {
        VariableSet vars(j.at("variables").get<std::vector<std::string>>());
        std::vector<std::pair<Exponents, Integer>> terms;
        for (const auto& t : j.at("terms")) {
            const auto& coeff = t.at("coeff").get_ref<const std::string&>();
            if (coeff.empty() || coeff.find_first_not_of("-0123456789") != std::string::npos)
                throw ParseError("coefficient is not a decimal integer: " + coeff);
            terms.emplace_back(t.at("exps").get<Exponents>(), Integer(coeff));
        }
        return LaurentPoly(std::move(vars), terms);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
    } catch (const std::runtime_error& e) {
        // cpp_int rejects malformed digit strings with runtime_error
        throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
    }
}

Json to_json(const SWResult& r)
{
    Json out;
    out["p"] = r.p;
    out["n"] = r.n;
    out["specialization"] = to_json(r.specialization_at_tK1);
    out["lower_bound"] = r.basic_class_lower_bound;
    out["full_polynomial"] = r.polynomial ? to_json(*r.polynomial) : Json("unavailable");
    return out;
}

Json to_json(const FamilyReport& r)
{
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json j;
        j["p"] = row.p;
        j["lower_bound"] = row.lower_bound;
        j["lemma63_ok"] = row.lemma63_ok;
        j["genus"] = row.genus;
        j["span"] = row.span;
        j["delta_gamma"] = to_json(row.delta_gamma);
        rows.push_back(std::move(j));
    }
    return {{"n", r.n}, {"rows", std::move(rows)}};
}

std::string to_csv(const FamilyReport& r)
{
    std::ostringstream out;
    out << "p,lower_bound,lemma63_ok,genus,span,delta_gamma\n";
    for (const auto& row : r.rows)
        out << row.p << ',' << row.lower_bound << ',' << (row.lemma63_ok ? "true" : "false") << ',' << row.genus
            << ',' << row.span << ",\"" << to_string(row.delta_gamma) << "\"\n";
    return out.str();
}

Json to_json(const UnboundednessCertificate& c)
{
    Json witnesses = Json::array();
    for (const auto& w : c.witnesses)
        witnesses.push_back({{"p", w.p}, {"lower_bound", w.lower_bound}});
    Json out;
    out["schema_version"] = UnboundednessCertificate::kSchemaVersion;
    out["kind"] = "unboundedness_certificate";
    out["target"] = c.target;
    out["witnesses"] = std::move(witnesses);
    return out;
}

UnboundednessCertificate certificate_from_json(const Json& j)
{
    try {
        if (j.at("schema_version").get<int>() != UnboundednessCertificate::kSchemaVersion)
            throw ParseError("unsupported certificate schema_version");
        if (j.at("kind").get<std::string>() != "unboundedness_certificate")
            throw ParseError("not an unboundedness certificate");
        UnboundednessCertificate c{j.at("target").get<std::int64_t>(), {}};
        for (const auto& w : j.at("witnesses"))
            c.witnesses.push_back({w.at("p").get<std::int64_t>(), w.at("lower_bound").get<std::size_t>()});
        return c;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed certificate JSON: ") + e.what());
    }
}

} // namespace knotsurgery
