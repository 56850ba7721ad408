#include "grasscf/errors.hpp"
#include "grasscf/plucker.hpp"
#include "grasscf/transforms.hpp"

#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace grasscf;
using namespace testsupport;

namespace {

// The 3 x 6 block example whose 20 minors are all positive except the last.
LatticeMatrix block_3x6() {
    return make_matrix(3, 6,
                       {1, 0, 0, 1, 1, 1,
                        0, 1, 0, -3, -2, -1,
                        0, 0, 1, 8, 5, 1});
}

const std::vector<long> kBlockMinors = {1, 8, 5, 1, 3, 2, 1, 1, 5, 3,
                                        1, 1, 1, 3, 7, 4, 1, 2, 1, -1};

} // namespace

TEST_CASE("compute_plucker on pinned matrices") {
    SUBCASE("3x6 block example") {
        PluckerVector p = compute_plucker(block_3x6());
        REQUIRE(p.size() == 20);
        for (std::size_t i = 0; i < 20; ++i)
            CHECK(p.at_rank(i) == kBlockMinors[i]);
    }
    SUBCASE("identity block") {
        LatticeMatrix m = make_matrix(3, 6,
                                      {1, 0, 0, 0, 0, 0,
                                       0, 1, 0, 0, 0, 0,
                                       0, 0, 1, 0, 0, 0});
        PluckerVector p = compute_plucker(m);
        CHECK(p.at_rank(0) == 1);
        for (std::size_t i = 1; i < p.size(); ++i)
            CHECK(p.at_rank(i) == 0);
    }
    SUBCASE("2x4 witness matrix") {
        LatticeMatrix m = make_matrix(2, 4, {4, 1, 7, 0, -6, 1, -8, 3});
        PluckerVector p = compute_plucker(m);
        CHECK(p == make_plucker(2, 4, {10, 10, 12, -15, 3, 21}));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(compute_plucker(make_matrix(3, 2, {1, 0, 0, 1, 0, 0})), DimensionError);
        // rank deficient: second row is twice the first
        CHECK_THROWS_AS(compute_plucker(make_matrix(2, 3, {1, 2, 3, 2, 4, 6})), ValidationError);
    }
}

TEST_CASE("compute_plucker agrees with the minor-expansion oracle") {
    std::mt19937_64 gen(11);
    for (int round = 0; round < 50; ++round) {
        int k = 1 + static_cast<int>(gen() % 3);
        int n = k + static_cast<int>(gen() % (7 - k));
        LatticeMatrix m = random_full_rank(gen, k, n, 9);
        PluckerVector p = compute_plucker(m);
        std::vector<Int> oracle = plucker_by_minors(m);
        REQUIRE(p.size() == oracle.size());
        for (std::size_t i = 0; i < oracle.size(); ++i)
            CHECK(p.at_rank(i) == oracle[i]);
    }
}

TEST_CASE("plucker_gcd") {
    CHECK(plucker_gcd(make_plucker(2, 4, {10, 10, 12, -15, 3, 21})) == 1);
    CHECK(plucker_gcd(make_plucker(2, 2, {-7})) == 7);
    std::mt19937_64 gen(12);
    for (int round = 0; round < 20; ++round) {
        LatticeMatrix m = random_full_rank(gen, 2, 5, 20);
        PluckerVector p = compute_plucker(m);
        std::vector<Int> doubled;
        for (const Int& e : p.entries())
            doubled.push_back(2 * e);
        PluckerVector q(2, 5, doubled);
        CHECK(plucker_gcd(q) == 2 * plucker_gcd(p));
        CHECK(plucker_gcd(p) == gcd_by_remainders(p.entries()));
    }
}

TEST_CASE("check_relations") {
    SUBCASE("constructed vectors are decomposable") {
        std::mt19937_64 gen(13);
        for (int round = 0; round < 30; ++round) {
            LatticeMatrix m = random_full_rank(gen, 2, 5, 15);
            CHECK(check_relations(compute_plucker(m)));
        }
    }
    SUBCASE("three-term failure") {
        CHECK_FALSE(check_relations(make_plucker(2, 4, {1, 0, 0, 0, 0, 1})));
    }
    SUBCASE("no relations below n = 4 for k = 2") {
        CHECK(check_relations(make_plucker(2, 3, {3, -5, 7})));
    }
    SUBCASE("k = 3 decomposable and broken") {
        PluckerVector p = compute_plucker(block_3x6());
        CHECK(check_relations(p));
        std::vector<Int> tweaked = p.entries();
        tweaked[0] += 1; // perturb p_{123}
        CHECK_FALSE(check_relations(PluckerVector(3, 6, tweaked)));
    }
    SUBCASE("k = n - 1 has no constraints") {
        CHECK(check_relations(make_plucker(3, 4, {7, -2, 9, 4})));
    }
}

TEST_CASE("is_primitive") {
    PluckerVector p = make_plucker(2, 4, {10, 10, 12, -15, 3, 21});
    CHECK(is_primitive(p));
    std::vector<Int> tripled;
    for (const Int& e : p.entries())
        tripled.push_back(3 * e);
    CHECK_FALSE(is_primitive(PluckerVector(2, 4, tripled)));
    CHECK(is_primitive(make_plucker(3, 3, {1})));
}

TEST_CASE("row operations act as expected on the Pluecker vector") {
    std::mt19937_64 gen(14);
    for (int round = 0; round < 25; ++round) {
        int k = 2 + static_cast<int>(gen() % 2);
        int n = k + 1 + static_cast<int>(gen() % (7 - k));
        LatticeMatrix m = random_full_rank(gen, k, n, 10);
        PluckerVector p = compute_plucker(m);

        // adding a multiple of one row to another changes nothing
        LatticeMatrix added = m;
        long mult = static_cast<long>(gen() % 7) - 3;
        for (int c = 0; c < n; ++c)
            added.at(0, c) += Int(mult) * m.at(1, c);
        CHECK(compute_plucker(added) == p);

        // swapping two rows negates every entry
        LatticeMatrix swapped = m;
        for (int c = 0; c < n; ++c)
            std::swap(swapped.at(0, c), swapped.at(1, c));
        PluckerVector q = compute_plucker(swapped);
        for (std::size_t i = 0; i < p.size(); ++i)
            CHECK(q.at_rank(i) == -p.at_rank(i));
    }
}

TEST_CASE("round trip: 1000 random matrices satisfy the relations") {
    std::mt19937_64 gen(15);
    for (int round = 0; round < 1000; ++round) {
        int k = 1 + static_cast<int>(gen() % 3);
        int n = k + static_cast<int>(gen() % (8 - k));
        LatticeMatrix m = random_full_rank(gen, k, n, 50);
        CHECK(check_relations(compute_plucker(m)));
    }
}

TEST_CASE("vector validation") {
    CHECK_THROWS_AS(make_plucker(2, 4, {0, 0, 0, 0, 0, 0}), ValidationError);
    CHECK_THROWS_AS(make_plucker(2, 4, {1, 2, 3}), ValidationError);
    CHECK_THROWS_AS(make_plucker(0, 4, {}), ValidationError);
}

TEST_CASE("skew access") {
    PluckerVector p = make_plucker(2, 4, {10, 10, 12, -15, 3, 21});
    CHECK(p.skew(1, 2) == 10);
    CHECK(p.skew(2, 1) == -10);
    CHECK(p.skew(3, 3) == 0);
    CHECK(p.skew(2, 3) == -15);
    CHECK(p.skew(3, 2) == 15);
}
