#include <doctest.h>

#include <sstream>
#include <vector>

#include "crush/estimator.hpp"
#include "crush/grid.hpp"
#include "crush/lll.hpp"
#include "crush/oracle.hpp"
#include "crush/serialize.hpp"

using namespace crush;

namespace {

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("estimate report json: key set and stable ordering") {
    const Hypergraph h = build_candy_grid({3, 3, 3});
    EstimateParams params;
    params.c = 3;
    params.masterSeed = 4;
    SplitOverrides overrides;
    overrides.samplesPerLevel = 200;
    const auto report = splitting_estimate(h, params, overrides);
    const Json j = to_json(report);

    const std::vector<std::string> expected = {
        "params",  "vertexCount",     "edgeCount", "samplesPerLevel",
        "levels",  "ellHat",          "logEll",    "ellMantissaExp",
        "logCount", "countMantissaExp", "totalSamples", "totalResamples",
        "wallTime"};
    std::vector<std::string> keys;
    for (const auto& item : j.items()) keys.push_back(item.key());
    CHECK(keys == expected);

    CHECK(j["params"]["digest"] == hypergraph_digest(h));
    CHECK(j["params"]["c"] == 3);
    CHECK(j["params"]["masterSeed"] == 4);
    CHECK(j["vertexCount"] == 9);
    CHECK(j["edgeCount"] == 6);
    CHECK(j["levels"].size() == 9);
    CHECK(j["levels"][0]["skippedExact"] == true);
    CHECK(j["levels"][2]["samples"] == 200);
    CHECK(j["logEll"].is_number());
    CHECK(j["ellMantissaExp"]["mantissa"].is_number());
}

TEST_CASE("estimate report json: zero estimate renders logs as null") {
    const Hypergraph line = build_candy_grid({1, 3, 3});
    EstimateParams params;
    params.c = 1;
    SplitOverrides overrides;
    overrides.samplesPerLevel = 20;
    const auto report = splitting_estimate(line, params, overrides);
    const Json j = to_json(report);
    CHECK(j["ellHat"] == 0.0);
    CHECK(j["logEll"].is_null());
    CHECK(j["logCount"].is_null());
    CHECK(j["ellMantissaExp"]["mantissa"] == 0.0);
    CHECK(j["ellMantissaExp"]["exponent"] == 0);
}

TEST_CASE("exact count json uses decimal strings") {
    const Hypergraph h = build_candy_grid({3, 3, 3});
    const Json j = to_json(oracle::exact_count(h, 3));
    CHECK(j["stableCount"] == "9750");
    CHECK(j["totalCount"] == "19683");
    CHECK(j["ell"].get<double>() == doctest::Approx(9750.0 / 19683.0).epsilon(1e-12));
}

TEST_CASE("mc report json: missing relative error is null") {
    McReport r;
    r.c = 2;
    r.samples = 10;
    r.hits = 0;
    r.ellHat = 0.0;
    CHECK(to_json(r)["relativeErrorEstimate"].is_null());
    r.hits = 7;
    r.ellHat = 0.7;
    r.relativeErrorEstimate = 0.25;
    const Json j = to_json(r);
    CHECK(j["relativeErrorEstimate"].get<double>() == 0.25);
    CHECK(j["hits"] == 7);
}

TEST_CASE("feasibility json carries both sides of the inequality") {
    const Json j = to_json(check_fpras_condition(7, 3));
    CHECK(j["feasible"] == true);
    CHECK(j["oneOverC"].get<double>() == doctest::Approx(1.0 / 7.0).epsilon(1e-15));
    CHECK(j["rhs"].get<double>() > j["oneOverC"].get<double>());
    CHECK(j["dependencyDegree"] == 13);
}

TEST_CASE("level csv: header, one row per level, skip flag column") {
    const Hypergraph h = build_candy_grid({3, 3, 3});
    EstimateParams params;
    params.c = 3;
    SplitOverrides overrides;
    overrides.samplesPerLevel = 100;
    const auto lines = split_lines(csv_levels(splitting_estimate(h, params, overrides)));
    REQUIRE(lines.size() == 10);
    CHECK(lines[0] == "t,cHat,samples,hits,meanResamples,skipped");
    CHECK(lines[1].substr(0, 2) == "0,");
    CHECK(lines[1].back() == '1');  // vertex 0 ends no edge
    CHECK(lines[3].back() == '0');  // vertex 2 ends the first row edge
}

TEST_CASE("region csv: grid block then min-colour block") {
    const auto lines = split_lines(csv_region(scan_region(2, 8, 2, 3)));
    REQUIRE(lines.size() >= 12);
    CHECK(lines[0] == "c\\k,2,3");
    CHECK(lines[1] == "2,0,0");
    CHECK(lines[6] == "7,0,1");  // c = 7 is the k = 3 threshold
    CHECK(lines[8].empty());
    CHECK(lines[9] == "k,minColors");
    CHECK(lines[10] == "2,18");
    CHECK(lines[11] == "3,7");
}

TEST_CASE("colour row formatting") {
    CHECK(format_coloring({0, 2, 1}) == "0,2,1");
    CHECK(format_coloring({}) == "");
    CHECK(format_coloring({5}) == "5");
}
