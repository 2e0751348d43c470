#include <doctest.h>

#include "knotsurgery/family.hpp"
#include "knotsurgery/json_io.hpp"
#include "knotsurgery/knot.hpp"

using namespace knotsurgery;

TEST_CASE("analyze_family single trivial row")
{
    const auto r = analyze_family(1, 1, 1);
    REQUIRE(r.rows.size() == 1);
    const auto& row = r.rows[0];
    CHECK(row.p == 1);
    CHECK(row.delta_gamma == parse_poly("1", VariableSet{"t"}));
    CHECK(row.lower_bound == 1);
    CHECK(row.lemma63_ok);
    CHECK(row.genus == 0);
    CHECK(row.span == 0);
}

TEST_CASE("analyze_family small range")
{
    const auto r = analyze_family(1, 2, 3);
    REQUIRE(r.rows.size() == 2);
    CHECK(r.rows[0].p == 2);
    CHECK(r.rows[0].lower_bound == 3);
    CHECK(r.rows[1].lower_bound == 5);
    CHECK(r.rows[1].delta_gamma == alexander_torus(TorusKnotSpec(3, 4)));
    CHECK(r.rows[0].lemma63_ok);
    CHECK(r.rows[1].lemma63_ok);
}

TEST_CASE("analyze_family range validation")
{
    CHECK_THROWS_AS(analyze_family(1, 0, 3), InvalidArgument);
    CHECK_THROWS_AS(analyze_family(1, 5, 3), InvalidArgument);
    CHECK_THROWS_AS(analyze_family(1, 1, 1001), InvalidArgument);
    CHECK_THROWS_AS(analyze_family(0, 1, 3), InvalidArgument);
    CHECK_NOTHROW(analyze_family(1, 1, 1001, 2000, 1));
}

TEST_CASE("analyze_family is independent of the thread schedule")
{
    const auto serial = analyze_family(3, 1, 120, kDefaultPCap, 1);
    for (unsigned threads : {2u, 5u, 16u}) {
        const auto parallel = analyze_family(3, 1, 120, kDefaultPCap, threads);
        CHECK(parallel == serial);
        CHECK(to_json(parallel).dump() == to_json(serial).dump());
        CHECK(to_csv(parallel) == to_csv(serial));
    }
    for (std::size_t i = 0; i < serial.rows.size(); ++i) {
        CHECK(serial.rows[i].p == static_cast<std::int64_t>(i) + 1);
        CHECK(serial.rows[i].lemma63_ok);
    }
}

TEST_CASE("lower bounds do not depend on n")
{
    const auto a = analyze_family(1, 1, 30);
    const auto b = analyze_family(4, 1, 30);
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        CHECK(a.rows[i].lower_bound == b.rows[i].lower_bound);
}

TEST_CASE("certify_unbounded")
{
    const auto c1 = certify_unbounded(1);
    CHECK(c1.witnesses == std::vector<Witness>{{1, 1}, {2, 3}});

    const auto c0 = certify_unbounded(0);
    CHECK(c0.witnesses == std::vector<Witness>{{1, 1}});

    const auto c50 = certify_unbounded(50);
    CHECK(c50.witnesses.back().p <= 51);
    CHECK(c50.witnesses.back().lower_bound > 50u);

    CHECK_THROWS_AS(certify_unbounded(50, 10), CapExhausted);
    CHECK_THROWS_AS(certify_unbounded(-1), InvalidArgument);
}

TEST_CASE("verify_certificate")
{
    const auto c = certify_unbounded(10);
    CHECK(verify_certificate(c, 1));
    CHECK(verify_certificate(c, 3));
    CHECK_FALSE(verify_certificate(c, 0));

    auto reordered = c;
    std::swap(reordered.witnesses.front(), reordered.witnesses.back());
    CHECK_FALSE(verify_certificate(reordered, 1));

    auto tampered = c;
    tampered.witnesses.back().lower_bound += 2;
    CHECK_FALSE(verify_certificate(tampered, 1));

    auto short_target = c;
    short_target.target = 1000;
    CHECK_FALSE(verify_certificate(short_target, 1));

    CHECK_FALSE(verify_certificate(UnboundednessCertificate{0, {}}, 1));
    CHECK_FALSE(verify_certificate(UnboundednessCertificate{0, {{0, 1}}}, 1));
}

TEST_CASE("certificate JSON round trip")
{
    const auto c = certify_unbounded(25);
    const auto j = to_json(c);
    CHECK(j["schema_version"] == 1);
    CHECK(certificate_from_json(j) == c);

    auto bad = j;
    bad["schema_version"] = 99;
    CHECK_THROWS_AS(certificate_from_json(bad), ParseError);
    bad = j;
    bad.erase("witnesses");
    CHECK_THROWS_AS(certificate_from_json(bad), ParseError);
}

TEST_CASE("family CSV layout")
{
    const auto csv = to_csv(analyze_family(1, 1, 2));
    CHECK(csv == "p,lower_bound,lemma63_ok,genus,span,delta_gamma\n"
                 "1,1,true,0,0,\"1\"\n"
                 "2,3,true,1,2,\"t - 1 + t^-1\"\n");
}
