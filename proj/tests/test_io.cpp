#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>

#include "nfam/construct.hpp"
#include "nfam/io.hpp"

using nfam::Family;
using nfam::Json;

TEST_CASE("family serialization is canonical", "[io]") {
    const Family A(2, {{1, 0}, {0, 0}});
    CHECK(nfam::family_to_json(A).dump() == R"({"n":2,"vectors":[[0,0],[1,0]]})");
    CHECK(nfam::family_to_json(Family(3)).dump() == R"({"n":3,"vectors":[]})");

    CHECK(nfam::family_from_json(nfam::family_to_json(A)) == A);
    const Family K = nfam::candidate_family(nfam::Params::make(2, 3, {1, 0, 0}, 1));
    CHECK(nfam::family_from_json(nfam::family_to_json(K)) == K);
}

TEST_CASE("malformed family documents are rejected", "[io]") {
    auto reject = [](const char* text) {
        CHECK_THROWS_AS(nfam::family_from_json(Json::parse(text)), std::invalid_argument);
    };
    reject(R"([1,2,3])");                                  // not an object
    reject(R"({"vectors":[[0]]})");                        // no dimension
    reject(R"({"n":"2","vectors":[[0,0]]})");              // dimension not an integer
    reject(R"({"n":0,"vectors":[]})");                     // dimension out of range
    reject(R"({"n":1001,"vectors":[]})");
    reject(R"({"n":2})");                                  // no vectors
    reject(R"({"n":2,"vectors":{}})");
    reject(R"({"n":2,"vectors":[[0,0,0]]})");              // wrong row length
    reject(R"({"n":2,"vectors":[[0,1.5]]})");              // fractional entry
    reject(R"({"n":2,"vectors":[[0,-1]]})");               // negative entry
    reject(R"({"n":2,"vectors":[[0,2000000000]]})");       // entry above the cap
    reject(R"({"n":2,"vectors":[[0,1],[0,1]]})");          // duplicate rows

    CHECK(nfam::family_from_json(Json::parse(R"({"n":2,"vectors":[]})")) == Family(2));
}

TEST_CASE("family files round-trip", "[io]") {
    const std::string path = "/tmp/nfam_io_roundtrip.json";
    const Family K = nfam::candidate_family(nfam::Params::make(3, 4, {1, 1, 0, 0}, 2));
    nfam::save_family(K, path);
    CHECK(nfam::load_family(path) == K);
    std::remove(path.c_str());

    CHECK_THROWS_AS(nfam::load_family("/tmp/nfam_io_does_not_exist.json"), std::invalid_argument);

    const std::string bad = "/tmp/nfam_io_bad.json";
    std::ofstream(bad) << "{not json";
    CHECK_THROWS_WITH(nfam::load_family(bad), Catch::Matchers::ContainsSubstring(bad));
    std::remove(bad.c_str());
}

TEST_CASE("csv rendering", "[io]") {
    CHECK(nfam::family_to_csv(Family(2, {{1, 0}, {0, 2}})) == "0,2\n1,0\n");
    CHECK(nfam::family_to_csv(Family(3, {{0, 0, 0}})) == "0,0,0\n");
    CHECK(nfam::family_to_csv(Family(2)).empty());
}
