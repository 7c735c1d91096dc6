#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "nfam/census.hpp"
#include "nfam/construct.hpp"

#include "oracles.hpp"

using nfam::BigInt;
using nfam::IntSeq;
using nfam::Params;

TEST_CASE("binomials match Pascal's triangle", "[census]") {
    CHECK(nfam::binomial(0, 0) == 1);
    CHECK(nfam::binomial(5, 2) == 10);
    CHECK(nfam::binomial(3, 5) == 0);   // m < k counts nothing
    CHECK(nfam::binomial(5, -1) == 0);
    CHECK(nfam::binomial(60, 30) == BigInt("118264581564861424"));

    for (int m = 0; m <= 25; ++m) {
        for (int k = 0; k <= m; ++k) {
            CHECK(nfam::binomial(m, k) == oracle::binomial(m, k));
        }
    }
}

TEST_CASE("elementary symmetric polynomials", "[census]") {
    CHECK(nfam::elementary_symmetric({1, 1, 2}, 2) == 5);
    CHECK(nfam::elementary_symmetric({1, 1, 0}, 3) == 0);
    CHECK(nfam::elementary_symmetric({4, 7, 9}, 0) == 1);
    CHECK_THROWS_AS(nfam::elementary_symmetric({1, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(nfam::elementary_symmetric({1, 2}, -1), std::invalid_argument);

    std::mt19937 rng(7301);
    std::uniform_int_distribution<int> entry(0, 9);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        IntSeq a(static_cast<std::size_t>(n));
        for (int& v : a) v = entry(rng);

        BigInt sum = 0;
        BigInt prod = 1;
        for (int k = 0; k <= n; ++k) {
            CHECK(nfam::elementary_symmetric(a, k) == oracle::elem_sym(a, k));
            sum += nfam::elementary_symmetric(a, k);
        }
        for (int v : a) prod *= (1 + v);
        CHECK(sum == prod);  // sum_k sigma_k(a) = prod (1 + a_i)
    }
}

TEST_CASE("closed form size, frozen examples", "[census]") {
    const nfam::SizeBreakdown one_shell = nfam::closed_form_size(Params::make(2, 3, {1, 0, 0}, 1));
    CHECK(one_shell.base_term == 7);
    CHECK(one_shell.layer_terms.empty());
    CHECK(one_shell.total == 7);

    const nfam::SizeBreakdown two_layer = nfam::closed_form_size(Params::make(3, 3, {0, 0, 0}, 1));
    CHECK(two_layer.base_term == 4);
    REQUIRE(two_layer.layer_terms.size() == 1);
    CHECK(two_layer.layer_terms[0] == 4);
    CHECK(two_layer.total == 8);

    // radius zero: total = prod (a_i + 1)
    CHECK(nfam::closed_form_size(Params::make(2, 3, {1, 1, 1}, 0)).total == 8);
    CHECK(nfam::closed_form_size(Params::make(2, 4, {3, 2, 1, 0}, 0)).total == 24);
}

TEST_CASE("closed form equals enumeration on the grid", "[census]") {
    for (int r : {2, 3}) {
        for (int n = r; n <= r + 2; ++n) {
            for (int d = 0; d <= 2; ++d) {
                for (int total = 0; total <= 4; ++total) {
                    const IntSeq balanced = nfam::balanced_partition(n, total);
                    std::vector<IntSeq> centers{balanced};
                    if (total >= 2) {
                        IntSeq lopsided = nfam::zeros(n);
                        lopsided[0] = total;
                        if (lopsided != balanced) centers.push_back(lopsided);
                    }
                    for (const IntSeq& a : centers) {
                        const Params p = Params::make(r, n, a, d);
                        const nfam::SizeBreakdown got = nfam::closed_form_size(p);
                        CHECK(got.total == BigInt(oracle::candidate_by_membership(p).size()));
                        BigInt recombined = got.base_term;
                        for (const BigInt& t : got.layer_terms) recombined += t;
                        CHECK(recombined == got.total);
                    }
                }
            }
        }
    }
}

TEST_CASE("reference size, frozen examples and identity", "[census]") {
    CHECK(nfam::reference_size(3, 1, 1) == 7);
    CHECK(nfam::reference_size(4, 2, 1) == 16);
    for (int n = 1; n <= 8; ++n) {
        for (int d = 0; d <= 3; ++d) {
            CHECK(nfam::reference_size(n, 0, d) == nfam::binomial(n + d, d));
        }
    }

    // exact count of the down-set of the shell around a unit prefix
    for (int p = 0; p <= 3; ++p) {
        for (int d = 0; d <= 3; ++d) {
            for (int n = std::max(p, 1); n <= 7; ++n) {
                const nfam::Family shell = nfam::sphere(nfam::ones_prefix(n, p), d);
                const nfam::Family D = oracle::down_closure_naive(n, shell.members());
                CHECK(nfam::reference_size(n, p, d) == BigInt(D.size()));
            }
        }
    }
}

TEST_CASE("balanced centers maximize the closed form", "[census]") {
    // frozen sweep results
    const nfam::BestBalanced b1 = nfam::best_balanced_size(3, 2, 3);
    CHECK(b1.size == 8);
    REQUIRE(b1.optima.size() == 1);
    CHECK(b1.optima[0].radius == 0);
    CHECK(b1.optima[0].center == IntSeq{1, 1, 1});

    const nfam::BestBalanced b2 = nfam::best_balanced_size(3, 2, 2);
    CHECK(b2.size == 4);
    REQUIRE(b2.optima.size() == 2);
    CHECK(b2.optima[0].radius == 0);
    CHECK(b2.optima[0].center == IntSeq{1, 1, 0});
    CHECK(b2.optima[1].radius == 1);
    CHECK(b2.optima[1].center == IntSeq{0, 0, 0});

    const nfam::BestBalanced b3 = nfam::best_balanced_size(4, 2, 2);
    CHECK(b3.size == 5);
    REQUIRE(b3.optima.size() == 1);
    CHECK(b3.optima[0].radius == 1);
    CHECK(b3.optima[0].center == IntSeq{0, 0, 0, 0});

    CHECK_THROWS_AS(nfam::best_balanced_size(2, 3, 0), std::invalid_argument);  // n < r
}

TEST_CASE("only balanced centers attain the maximum over compositions", "[census]") {
    // enumerate all compositions of the total and compare
    for (int r : {2, 3}) {
        for (int n = r; n <= 4; ++n) {
            for (int d = 0; d <= 2; ++d) {
                for (int total = 0; total <= 4; ++total) {
                    const IntSeq balanced = nfam::balanced_partition(n, total);
                    BigInt best = 0;
                    std::vector<IntSeq> argmax;
                    IntSeq a = nfam::zeros(n);
                    auto sweep = [&](auto&& self, int coord, int rem) -> void {
                        if (coord == n) {
                            if (rem != 0) return;
                            const BigInt size = nfam::closed_form_size(Params::make(r, n, a, d)).total;
                            if (size > best) {
                                best = size;
                                argmax.clear();
                            }
                            if (size == best) argmax.push_back(a);
                            return;
                        }
                        for (int v = 0; v <= rem; ++v) {
                            a[static_cast<std::size_t>(coord)] = v;
                            self(self, coord + 1, rem - v);
                        }
                        a[static_cast<std::size_t>(coord)] = 0;
                    };
                    sweep(sweep, 0, total);
                    // winners are exactly the permutations of the balanced center
                    std::set<IntSeq> expected;
                    IntSeq perm = balanced;
                    std::sort(perm.begin(), perm.end());
                    do {
                        expected.insert(perm);
                    } while (std::next_permutation(perm.begin(), perm.end()));
                    CHECK(std::set<IntSeq>(argmax.begin(), argmax.end()) == expected);
                }
            }
        }
    }
}
