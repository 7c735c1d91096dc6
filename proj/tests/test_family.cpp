#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "nfam/family.hpp"

#include "oracles.hpp"

using nfam::Antichain;
using nfam::Family;
using nfam::IntSeq;

TEST_CASE("families canonicalize to sorted unique member lists", "[family]") {
    const Family A(2, {{1, 0}, {0, 0}, {1, 0}, {0, 1}});
    CHECK(A.size() == 3);
    CHECK(A.members() == std::vector<IntSeq>{{0, 0}, {0, 1}, {1, 0}});
    CHECK(A.contains({1, 0}));
    CHECK_FALSE(A.contains({1, 1}));
    CHECK(A == Family(2, {{0, 1}, {1, 0}, {0, 0}}));

    CHECK_THROWS_AS(Family(2, {{1, 0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Family(2, {{-1, 0}}), std::invalid_argument);
    CHECK(Family(3).empty());
}

TEST_CASE("maximal elements form the generating antichain", "[family]") {
    const Family A(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
    const Antichain top = nfam::maximal_elements(A);
    CHECK(top.as_family() == Family(3, {{1, 0, 0}, {0, 1, 0}}));

    // all 8 binary triples collapse to the all-ones generator
    std::vector<IntSeq> cube;
    for (int b = 0; b < 8; ++b) cube.push_back({b & 1, (b >> 1) & 1, (b >> 2) & 1});
    CHECK(nfam::maximal_elements(Family(3, cube)).as_family() == Family(3, {{1, 1, 1}}));

    // an antichain is its own set of maximal elements
    const Family anti(2, {{2, 0}, {0, 2}, {1, 1}});
    CHECK(nfam::maximal_elements(anti).as_family() == anti);

    CHECK_THROWS_AS(nfam::maximal_elements(Family(2)), std::invalid_argument);
}

TEST_CASE("down-sets of antichains", "[family]") {
    const Antichain one(Family(3, {{1, 1, 0}}));
    CHECK(nfam::downset_of(one) ==
          Family(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}));

    const Antichain zero(Family(2, {{0, 0}}));
    CHECK(nfam::downset_of(zero) == Family(2, {{0, 0}}));

    const Antichain units(Family(3, {{1, 0, 0}, {0, 1, 0}}));
    CHECK(nfam::downset_of(units) == Family(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}));

    CHECK_THROWS_AS(Antichain(Family(2, {{0, 0}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("down-set closure round-trips through maximal elements", "[family]") {
    std::mt19937 rng(7101);
    std::uniform_int_distribution<int> entry(0, 3);
    std::uniform_int_distribution<int> count(1, 5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<IntSeq> gens;
        for (int k = count(rng); k > 0; --k) {
            gens.push_back({entry(rng), entry(rng), entry(rng)});
        }
        const Family D = nfam::down_closure(Family(3, gens));
        CHECK(D == oracle::down_closure_naive(3, gens));
        CHECK(nfam::downset_of(nfam::maximal_elements(D)) == D);

        const Antichain top = nfam::maximal_elements(D);
        CHECK(nfam::maximal_elements(nfam::downset_of(top)).as_family() == top.as_family());
    }
}
