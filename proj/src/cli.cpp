#include "knotsurgery/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "knotsurgery/family.hpp"
#include "knotsurgery/json_io.hpp"
#include "knotsurgery/knot.hpp"
#include "knotsurgery/surgery.hpp"

namespace knotsurgery {

namespace {

struct AlexanderArgs {
    std::string expr;
    std::string var = "t";
    std::string format = "text";
    bool raw = false;
};

struct TorresArgs {
    std::string poly;
    std::int64_t lk = 1;
    std::string var = "y";
    std::string format = "text";
};

struct SwArgs {
    std::int64_t p = 1;
    std::int64_t n = 1;
    std::string delta_l;
    std::string format = "json";
};

struct FamilyArgs {
    std::int64_t n = 1;
    std::int64_t p_min = 1;
    std::int64_t p_max = 1;
    std::int64_t cap = kDefaultPCap;
    unsigned threads = 0;
    std::string format = "text";
};

struct CertifyArgs {
    std::int64_t target = 0;
    std::int64_t cap = kDefaultPCap;
    std::int64_t n = 1;
    std::string verify_path;
};

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_alexander(const AlexanderArgs& a, std::ostream& out)
{
    const KnotExpr k = parse_knot_expr(a.expr);
    LaurentPoly delta = alexander_expr(k, a.var);
    if (a.raw)
        delta = normalize_ordinary(delta);
    if (a.format == "json")
        print_json(out, Json{{"knot", to_string(k)}, {"alexander", to_json(delta)}});
    else
        out << to_string(delta) << '\n';
    return kExitOk;
}

int cmd_torres(const TorresArgs& a, std::ostream& out)
{
    LaurentPoly delta = parse_poly(a.poly);
    if (delta.variables().empty())
        delta = parse_poly(a.poly, VariableSet{a.var});
    if (delta.variables().size() != 1)
        throw ParseError("torres expects a polynomial in one variable");
    if (a.lk < 0)
        throw InvalidArgument("--lk must be >= 0");
    const LaurentPoly result = torres_specialize(delta, a.lk);
    if (a.format == "json")
        print_json(out, Json{{"lk", a.lk}, {"input", to_json(delta)}, {"result", to_json(result)}});
    else
        out << to_string(result) << '\n';
    return kExitOk;
}

int cmd_sw(const SwArgs& a, std::ostream& out)
{
    std::optional<LaurentPoly> delta_l;
    if (!a.delta_l.empty())
        delta_l = parse_poly(a.delta_l, VariableSet{kLinkX, kLinkY});
    const SWResult r = sw_specialized(SurgerySpec(a.n, LinkFamilyMember(a.p)), delta_l);
    if (a.format == "json") {
        print_json(out, to_json(r));
    } else {
        out << "p: " << r.p << '\n'
            << "n: " << r.n << '\n'
            << "specialization: " << to_string(r.specialization_at_tK1) << '\n'
            << "lower_bound: " << r.basic_class_lower_bound << '\n'
            << "full_polynomial: " << (r.polynomial ? to_string(*r.polynomial) : "unavailable") << '\n';
    }
    return kExitOk;
}

int cmd_family(const FamilyArgs& a, std::ostream& out)
{
    const FamilyReport report = analyze_family(a.n, a.p_min, a.p_max, a.cap, a.threads);
    if (a.format == "json") {
        print_json(out, to_json(report));
    } else if (a.format == "csv") {
        out << to_csv(report);
    } else {
        for (const auto& row : report.rows)
            out << "p=" << row.p << " lower_bound=" << row.lower_bound
                << " lemma63_ok=" << (row.lemma63_ok ? "true" : "false") << " genus=" << row.genus
                << " span=" << row.span << " delta_gamma=" << to_string(row.delta_gamma) << '\n';
    }
    return kExitOk;
}

int cmd_certify(const CertifyArgs& a, std::ostream& out, std::ostream& err)
{
    if (!a.verify_path.empty()) {
        std::ifstream in(a.verify_path);
        if (!in)
            throw ParseError("cannot open certificate file '" + a.verify_path + "'");
        Json j;
        try {
            j = Json::parse(in);
        } catch (const Json::parse_error& e) {
            throw ParseError(std::string("certificate is not valid JSON: ") + e.what());
        }
        const bool ok = verify_certificate(certificate_from_json(j), a.n);
        out << (ok ? "valid" : "invalid") << '\n';
        if (!ok)
            err << "certificate failed verification\n";
        return ok ? kExitOk : kExitUsage;
    }
    print_json(out, to_json(certify_unbounded(a.target, a.cap)));
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Alexander and Seiberg-Witten invariants of the knot-surgery family X_p", "knotsurgery"};
    app.require_subcommand(1);

    AlexanderArgs alex;
    auto* alexander = app.add_subcommand("alexander", "Alexander polynomial of a knot expression");
    alexander->add_option("expr", alex.expr, "unknot | torus(p,q) | mirror(E) | sum(E,E)")->required();
    alexander->add_option("--var", alex.var, "polynomial variable");
    alexander->add_flag("--raw", alex.raw, "print the ordinary (unsymmetrized) representative");
    alexander->add_option("--format", alex.format)->check(CLI::IsMember({"text", "json"}));

    TorresArgs torres;
    auto* torres_cmd = app.add_subcommand("torres", "Torres specialization Delta_L(1, y)");
    torres_cmd->add_option("poly", torres.poly, "Delta_Gamma as a one-variable polynomial")->required();
    torres_cmd->add_option("--lk", torres.lk, "linking number")->required();
    torres_cmd->add_option("--var", torres.var, "variable used when the input is constant");
    torres_cmd->add_option("--format", torres.format)->check(CLI::IsMember({"text", "json"}));

    SwArgs sw;
    auto* sw_cmd = app.add_subcommand("sw", "Seiberg-Witten data of X_p = E(n,1;L_p)");
    sw_cmd->add_option("--p", sw.p, "family index")->required();
    sw_cmd->add_option("--n", sw.n, "E(n) parameter");
    sw_cmd->add_option("--delta-l", sw.delta_l, "explicit two-variable Delta_L in x, y");
    sw_cmd->add_option("--format", sw.format)->check(CLI::IsMember({"text", "json"}));

    FamilyArgs fam;
    auto* family = app.add_subcommand("family", "per-p invariants over a range of the family");
    family->add_option("--n", fam.n, "E(n) parameter");
    family->add_option("--pmin", fam.p_min)->required();
    family->add_option("--pmax", fam.p_max)->required();
    family->add_option("--cap", fam.cap, "largest admissible p");
    family->add_option("--threads", fam.threads, "worker threads (0 = hardware concurrency)");
    family->add_option("--format", fam.format)->check(CLI::IsMember({"text", "json", "csv"}));

    CertifyArgs cert;
    auto* certify = app.add_subcommand("certify", "emit or verify an unboundedness certificate");
    auto* target_opt = certify->add_option("--target", cert.target, "bound to exceed");
    certify->add_option("--cap", cert.cap, "largest p to scan");
    certify->add_option("--n", cert.n, "E(n) parameter used when verifying");
    auto* verify_opt = certify->add_option("--verify", cert.verify_path, "certificate file to re-check");
    target_opt->excludes(verify_opt);

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("knotsurgery");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage)
        argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (alexander->parsed())
            return cmd_alexander(alex, out);
        if (torres_cmd->parsed())
            return cmd_torres(torres, out);
        if (sw_cmd->parsed())
            return cmd_sw(sw, out);
        if (family->parsed())
            return cmd_family(fam, out);
        if (certify->parsed())
            return cmd_certify(cert, out, err);
    } catch (const InternalInconsistency& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return kExitInternal;
    } catch (const NotDivisible& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return kExitInternal;
    } catch (const CapExhausted& e) {
        err << "cap exhausted: " << e.what() << '\n';
        return kExitInternal;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace knotsurgery
