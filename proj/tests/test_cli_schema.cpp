#include <doctest.h>

#include "sixlines/report.hpp"

using namespace sixlines;

TEST_CASE("configuration parsing from request JSON") {
    json moduli = json::parse(R"({"moduli": ["2", "3", "4", "5"]})");
    Configuration c = configuration_from_json(moduli);
    REQUIRE(c.moduli.has_value());
    CHECK(c.moduli->abcd[3] == Rational(5));

    json rosenhain = json::parse(R"({"rosenhain": ["2", "3", "5"]})");
    Configuration r = configuration_from_json(rosenhain);
    CHECK(r.rosenhain.has_value());

    json lines = json::parse(
        R"({"lines": [["1","0","0"],["0","1","0"],["0","0","1"],
               ["1","1","1"],["1","2","3"],["1","4","5"]]})");
    Configuration l = configuration_from_json(lines);
    CHECK(do_coordinates(l).r == Rational(-12));

    // strict schema
    CHECK_THROWS_AS(configuration_from_json(json::parse(R"({"moduli": ["1","2","3"]})")),
                    RequestError);
    CHECK_THROWS_AS(configuration_from_json(json::parse(R"({"unknown": 1})")), RequestError);
    CHECK_THROWS_AS(configuration_from_json(json::parse(
                        R"({"moduli": ["1","2","3","4"], "rosenhain": ["2","3","5"]})")),
                    RequestError);
    CHECK_THROWS_AS(configuration_from_json(json::parse(R"({"moduli": ["1","2","x","4"]})")),
                    RequestError);
}

TEST_CASE("invariants report content") {
    Configuration c = configuration_from_json(json::parse(R"({"moduli": ["2","3","4","5"]})"));
    json rep = invariants_report(c);
    CHECK(rep["schema"] == kSchemaTag);
    CHECK(rep["results"]["j_invariants"]["value"] ==
          json({"63", "-243", "729", "-8748", "-32076"}));
    CHECK(rep["results"]["r_coordinate"]["value"] == "-12");
    CHECK(rep["results"]["plucker_relations"]["status"] == "pass");
    CHECK(rep["results"]["stratum"]["value"]["case"] == "generic(0)");
    CHECK(report_ok(rep));
}

TEST_CASE("classify report") {
    Configuration c = configuration_from_json(json::parse(R"({"moduli": ["2","2","4","5"]})"));
    json rep = classify_report(c);
    CHECK(rep["results"]["stratum"]["value"]["case"] == "three-concurrent(2)");
    CHECK(rep["results"]["stratum"]["value"]["vanishing_t_indices"] == json::array({2}));
    CHECK(report_ok(rep));
}

TEST_CASE("reports serialize deterministically") {
    Configuration c = configuration_from_json(json::parse(R"({"moduli": ["2","3","4","5"]})"));
    std::string a = invariants_report(c).dump(2);
    std::string b = invariants_report(c).dump(2);
    CHECK(a == b);
}

TEST_CASE("fibration report for the alternate model") {
    Configuration c = configuration_from_json(json::parse(R"({"moduli": ["2","3","5","8"]})"));
    json rep = fibration_report(FibrationLabel::YAlternate, c);
    CHECK(rep["results"]["euler_audit"]["status"] == "pass");
    CHECK(rep["results"]["fibers"]["value"]["two_torsion_order"] == 2);
    CHECK(report_ok(rep));
}

TEST_CASE("tangent report passes") {
    json rep = tangent_report(Rational(2), Rational(3), Rational(5));
    CHECK(rep["results"]["restriction_identity"]["status"] == "pass");
    CHECK(rep["results"]["j4_zero"]["status"] == "pass");
    CHECK(report_ok(rep));
}

TEST_CASE("report_ok notices failing entries") {
    json rep{{"schema", kSchemaTag},
             {"results", {{"a", {{"status", "pass"}}}, {"b", {{"status", "fail"}}}}}};
    CHECK_FALSE(report_ok(rep));
    rep["results"]["b"]["status"] = "info";
    CHECK(report_ok(rep));
    rep["results"]["b"]["status"] = "error";
    CHECK_FALSE(report_ok(rep));
}

TEST_CASE("params report round trip") {
    Configuration c = configuration_from_json(json::parse(R"({"moduli": ["2","3","4","5"]})"));
    json rep = params_report(c);
    CHECK(rep["results"]["moduli_match"]["status"] == "pass");
    CHECK(rep["results"]["params"]["value"]["zeta"]["D"] == 5);
}
