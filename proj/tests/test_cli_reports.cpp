#include "cremona/report.hpp"

#include <doctest.h>

#include <set>

using namespace cremona;

TEST_CASE("claim registry") {
    const auto all = claims();
    REQUIRE(all.size() >= 20);
    std::set<std::string_view> ids;
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK_FALSE(all[i].anchor.empty());
        CHECK(ids.insert(all[i].id).second);
        if (i > 0) CHECK(all[i - 1].id < all[i].id);
    }
    CHECK(claim("adjoint.cremona.spatial9").anchor == "M^t I_{1,4} \\check{M} = I_{1,4}");
    CHECK_THROWS_AS(claim("nope"), std::out_of_range);
}

TEST_CASE("verification report") {
    VerifyOptions o;
    o.steps = 20;
    o.track_steps = 3;
    o.random_words = 20;
    const VerificationReport r = verify_paper(o);
    CHECK(r.all_pass());
    REQUIRE(r.items.size() == claims().size());
    for (std::size_t i = 0; i < r.items.size(); ++i) {
        CHECK(r.items[i].id == claims()[i].id);
        CHECK(r.items[i].anchor == claim(r.items[i].id).anchor);
        INFO(r.items[i].id << " " << r.items[i].witness.dump());
        CHECK(r.items[i].pass);
    }
    CHECK(to_json(r, false).dump() == to_json(verify_paper(o), false).dump());
    const Json j = to_json(r, true);
    CHECK(j["all_pass"] == true);
    CHECK(j["items"][0].contains("seconds"));
    CHECK_FALSE(to_json(r, false)["items"][0].contains("seconds"));
}

TEST_CASE("fault injection names the adjointness anchor") {
    VerifyOptions o;
    o.steps = 5;
    o.track_steps = 1;
    o.random_words = 5;
    o.fault = Fault::adjointness;
    const VerificationReport r = verify_paper(o);
    CHECK_FALSE(r.all_pass());
    std::vector<std::string> failed;
    for (const auto& i : r.items)
        if (!i.pass) failed.push_back(i.anchor);
    CHECK(failed == std::vector<std::string>{"M^t I_{1,4} \\check{M} = I_{1,4}"});
    CHECK(summary(r).find("FAIL adjoint.cremona.spatial9  M^t I_{1,4} \\check{M} = I_{1,4}") != std::string::npos);
}

TEST_CASE("a degenerate configuration fails the tracking item") {
    VerifyOptions o;
    o.steps = 2;
    o.random_words = 2;
    o.spatial_config = configuration_from_json(Json::parse(
        R"([[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1],[1,1,1,1],[1,1,0,0],[2,3,5,7],[1,-1,2,3],[3,1,4,1]])"));
    const VerificationReport r = verify_paper(o);
    for (const auto& i : r.items) {
        if (i.id == "geometry.track") {
            CHECK_FALSE(i.pass);
            CHECK(i.witness["degeneracy"]["clean"] == false);
        }
    }
}

TEST_CASE("decimal strings") {
    CHECK(decimal_string(ratio(1, 3), 3) == "0.333");
    CHECK(decimal_string(ratio(2, 3), 3) == "0.667");
    CHECK(decimal_string(ratio(-1, 8), 2) == "-0.13");
    CHECK(decimal_string(Rational(5), 0) == "5");
    CHECK(decimal_string(ratio(-1, 1000), 2) == "0.00");
    CHECK(decimal_string(ratio(123456, 1000), 1) == "123.5");
}

TEST_CASE("configuration json") {
    const Json j = Json::parse(R"([["1/2", 1, 0], [0, "3", "-1/3"], [1, 1, 1]])");
    const Configuration c = configuration_from_json(j);
    CHECK(c.signature() == BlowupSignature::make(2, 3));
    CHECK(c.point(1) == ProjPoint::of({1, 2, 0}));
    CHECK(c.point(2) == ProjPoint::of({0, 9, -1}));
    CHECK(configuration_from_json(to_json(c)) == c);
    CHECK_THROWS_AS(configuration_from_json(Json::parse("[]")), ParseError);
    CHECK_THROWS_AS(configuration_from_json(Json::parse("[[1,2,3],[1,2]]")), ParseError);
    CHECK_THROWS_AS(configuration_from_json(Json::parse("[[1,2,3],[1,2,1.5]]")), ParseError);
    CHECK_THROWS_AS(configuration_from_json(Json::parse("[[0,0,0],[1,2,3]]")), ParseError);
}

TEST_CASE("serializers") {
    CHECK(to_json(ratio(-3, 6)) == "-1/2");
    CHECK(to_json(Polynomial::t() * Polynomial::t() - Polynomial(2)).dump() == R"(["-2","0","1"])");
    const auto sig = signature_of(Variant::spatial9);
    const auto orbit = curve_orbit(m_sigma(Variant::spatial9), parse_curve("1; 1,1,0,0,0,0,0,0,0", sig), 2);
    const std::string csv = orbit_table_csv(orbit);
    CHECK(csv.substr(0, csv.find('\n')) == "n,delta,mu_1,mu_2,mu_3,mu_4,mu_5,mu_6,mu_7,mu_8,mu_9,sign");
    CHECK(csv.find("2,7,3,2,2,2,1,1,1,1,1,-1") != std::string::npos);
    CHECK(orbit_table_markdown(orbit).find("| 1 | 3 | 1 | 1 | 1 | 1 | 1 | 1 | 0 | 0 | 0 | -1 |") != std::string::npos);
    const Json rows = orbit_table_json(orbit);
    CHECK(rows[2]["delta"] == "7");
    CHECK(rows[2]["mu"][0] == "3");
    VerificationReport r;
    r.items.push_back({"x", "a \"quoted\" anchor", true, Json::object(), 0.5});
    CHECK(to_csv(r, false) == "id,status,anchor\nx,pass,\"a \"\"quoted\"\" anchor\"\n");
    CHECK(to_markdown(r, true).find("| pass | x | `a \"quoted\" anchor` | 0.5 |") != std::string::npos);
}
