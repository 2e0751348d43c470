// Acceptance suite: every criterion runs at its pinned size and time
// budget and prints one PASS/FAIL line. Exit status is nonzero if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "knotsurgery/family.hpp"
#include "knotsurgery/json_io.hpp"
#include "knotsurgery/knot.hpp"
#include "knotsurgery/surgery.hpp"
#include "oracle.hpp"

using namespace knotsurgery;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(std::string why)
    {
        if (ok)
            detail = std::move(why);
        ok = false;
    }
};

struct Criterion {
    int id;
    std::string name;
    double budget_seconds; // <= 0 means no time bound
    std::function<Outcome()> body;
};

LaurentPoly binomial(Exponent e) { return LaurentPoly::univariate("t", {{e, 1}, {0, -1}}); }

Outcome torus_divisibility()
{
    Outcome o;
    for (std::int64_t p = 2; p <= 60; ++p)
        for (std::int64_t q = p + 1; q <= 60; ++q) {
            if (std::gcd(p, q) != 1)
                continue;
            const std::string tag = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
            LaurentPoly quotient;
            try {
                quotient = exact_divide(binomial(p * q) * binomial(1), binomial(p) * binomial(q));
            } catch (const Error& e) {
                o.fail(tag + ": " + e.what());
                continue;
            }
            for (const auto& [e, c] : quotient.terms())
                if (c != 1 && c != -1)
                    o.fail(tag + ": coefficient outside {-1,0,1}");
            if (span(quotient) != (p - 1) * (q - 1))
                o.fail(tag + ": wrong span");
        }
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    for (std::int64_t p = 2; p <= 9; ++p)
        for (std::int64_t q = p + 1; q <= 9; ++q) {
            if (std::gcd(p, q) != 1)
                continue;
            const TorusKnotSpec k(p, q);
            const auto fox = symmetrize(alexander_fox_oracle(torus_knot_presentation(k), torus_knot_abelianization(k)));
            const auto closed = symmetrize(alexander_torus(k));
            if (fox != closed || !equal_up_to_units(fox, closed))
                o.fail("T(" + std::to_string(p) + "," + std::to_string(q) + "): " + to_string(fox)
                       + " != " + to_string(closed));
        }
    return o;
}

Outcome lemma_sweep()
{
    Outcome o;
    for (std::int64_t p = 1; p <= 300; ++p) {
        const auto count = term_count(alexander_torus(TorusKnotSpec(p, p + 1)));
        if (count < static_cast<std::size_t>(p))
            o.fail("p=" + std::to_string(p) + ": only " + std::to_string(count) + " terms");
    }
    return o;
}

Outcome torres_identity()
{
    Outcome o;
    for (std::int64_t p = 1; p <= 100; ++p) {
        const auto delta = alexander_torus(TorusKnotSpec(p, p + 1), "y");
        if (torres_specialize(delta, 1) != delta)
            o.fail("lk=1 changed Delta at p=" + std::to_string(p));

        oracle::Dense dense{delta.terms().begin()->first[0], {}};
        for (Exponent e = dense.low; e <= high_degree(delta); ++e)
            dense.coeffs.push_back(static_cast<long long>(delta.coefficient({e})));
        for (std::int64_t lk : {0, 2, 3}) {
            const oracle::Dense series{0, std::vector<long long>(static_cast<std::size_t>(lk), 1)};
            const auto expected = oracle::to_poly(oracle::convolve(series, dense), "y");
            if (torres_specialize(delta, lk) != expected)
                o.fail("lk=" + std::to_string(lk) + " mismatch at p=" + std::to_string(p));
        }
    }
    return o;
}

Outcome prefactor_law()
{
    Outcome o;
    std::mt19937_64 rng(5);
    const VariableSet xy{kLinkX, kLinkY};
    const VariableSet g{kTG};
    for (int i = 0; i < 20; ++i) {
        const auto delta_l = oracle::random_nonzero_poly(rng, xy);
        for (std::int64_t n = 2; n <= 4; ++n)
            if (!evaluate_at_one(sw_link_surgery(SurgerySpec(n, LinkFamilyMember(2)), delta_l), kTK).is_zero())
                o.fail("n=" + std::to_string(n) + " nonzero at t_K=1 for " + to_string(delta_l));
        const auto n1 = evaluate_at_one(sw_link_surgery(SurgerySpec(1, LinkFamilyMember(2)), delta_l), kTK);
        const auto expected = substitute(evaluate_at_one(delta_l, kLinkX), g, {{kLinkY, {2}}});
        if (n1 != expected)
            o.fail("n=1 specialization mismatch for " + to_string(delta_l));
    }
    return o;
}

Outcome certificates()
{
    Outcome o;
    for (std::int64_t m = 1; m <= 500; ++m) {
        try {
            const auto c = certify_unbounded(m, 1000);
            if (c.witnesses.back().p > m + 1)
                o.fail("m=" + std::to_string(m) + ": last witness p too large");
            if (!verify_certificate(c, 1))
                o.fail("m=" + std::to_string(m) + ": certificate failed verification");
        } catch (const Error& e) {
            o.fail("m=" + std::to_string(m) + ": " + e.what());
        }
    }
    return o;
}

Outcome algebra_properties()
{
    Outcome o;
    std::mt19937_64 rng(1017);
    const VariableSet xyz{"x", "y", "z"};
    const VariableSet t{"t"};
    const LaurentPoly zero(xyz);
    const LaurentPoly one = LaurentPoly::constant(xyz, 1);
    for (int i = 0; i < 1000; ++i) {
        const auto a = oracle::random_poly(rng, xyz);
        const auto b = oracle::random_poly(rng, xyz);
        const auto c = oracle::random_poly(rng, xyz);
        if (!(a + b == b + a && (a + b) + c == a + (b + c) && a + zero == a))
            o.fail("additive axioms: " + to_string(a));
        if (!(a * b == b * a && (a * b) * c == a * (b * c) && a * one == a))
            o.fail("multiplicative axioms: " + to_string(a));
        if (a * (b + c) != a * b + a * c)
            o.fail("distributivity: " + to_string(a));
        if (LaurentPoly(xyz, std::vector<std::pair<Exponents, Integer>>(a.terms().begin(), a.terms().end())) != a)
            o.fail("canonical form not idempotent: " + to_string(a));

        const auto u = oracle::random_poly(rng, t, 8, 10, 50);
        const auto v = oracle::random_nonzero_poly(rng, t, 5, 6, 9);
        try {
            if (exact_divide(u * v, v) != u)
                o.fail("exact_divide round trip: " + to_string(u) + " / " + to_string(v));
        } catch (const Error& e) {
            o.fail(std::string("exact_divide threw: ") + e.what());
        }

        if (term_count(substitute(a, xyz, {{"x", {2, 0, 0}}, {"y", {0, 2, 0}}, {"z", {0, 0, 2}}})) != term_count(a))
            o.fail("substitution changed the term count: " + to_string(a));
        if (term_count(substitute(u, t, {{"t", {2}}})) != term_count(u))
            o.fail("t -> t^2 changed the term count: " + to_string(u));

        const auto s = oracle::random_symmetric(rng);
        const auto unit = LaurentPoly::univariate("t", {{static_cast<Exponent>(rng() % 21) - 10, rng() % 2 ? 1 : -1}});
        const auto once = symmetrize(s * unit);
        if (symmetrize(once) != once || substitute(once, t, {{"t", {-1}}}) != once)
            o.fail("symmetrize not an involution on " + to_string(s * unit));

        if (parse_poly(to_string(a), xyz) != a || poly_from_json(to_json(a)) != a)
            o.fail("serialization round trip: " + to_string(a));
        if (Json::parse(to_json(a).dump()) != to_json(a))
            o.fail("JSON text round trip: " + to_string(a));
    }
    return o;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "torus-knot divisibility, coprime 2 <= p < q <= 60", 10.0, torus_divisibility},
        {2, "Fox oracle equals closed formula, coprime 2 <= p < q <= 9", 5.0, oracle_equivalence},
        {3, "term_count(Delta_T(p,p+1)) >= p for 1 <= p <= 300", 30.0, lemma_sweep},
        {4, "Torres identity lk=1 for p <= 100; lk in {0,2,3} vs convolution", 0.0, torres_identity},
        {5, "prefactor law at t_K = 1 for n in {1,2,3,4}, 20 random Delta_L", 0.0, prefactor_law},
        {6, "certify_unbounded(m, 1000) for m = 1..500, last p <= m+1, all verify", 60.0, certificates},
        {7, "algebra property suite, 1000 randomized cases each", 0.0, algebra_properties},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.fail(std::string("uncaught exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && secs >= c.budget_seconds)
            o.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_seconds) + " s");
        if (!o.ok)
            ++failures;
        std::printf("[%s] criterion %d: %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    o.ok ? "" : " -- ", o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
