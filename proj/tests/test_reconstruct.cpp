#include "grasscf/errors.hpp"
#include "grasscf/mee.hpp"
#include "grasscf/minee.hpp"
#include "grasscf/reconstruct.hpp"

#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace grasscf;
using namespace testsupport;

namespace {

LatticeMatrix random_unimodular_kxk(std::mt19937_64& gen, int k) {
    // product of random elementary row operations on the identity
    LatticeMatrix m = IntMatrix::identity(k);
    for (int step = 0; step < 8; ++step) {
        int a = static_cast<int>(gen() % k);
        int b = static_cast<int>(gen() % k);
        if (a == b)
            continue;
        long q = static_cast<long>(gen() % 5) - 2;
        for (int c = 0; c < k; ++c)
            m.at(a, c) += Int(q) * m.at(b, c);
    }
    return m;
}

} // namespace

TEST_CASE("assemble on the worked G(2,4) example") {
    PluckerVector p = make_plucker(2, 4, {10, 10, 12, -15, 3, 21});
    Trace trace = mee_run(p);
    ReconstructionResult r = assemble(trace, p);
    CHECK(compute_plucker(r.matrix) == p);
    CHECK(r.sublattice_index == 1);
    CHECK(r.matrix.rows() == 2);
    CHECK(r.matrix.cols() == 4);
    // one known witness with the same Pluecker vector
    LatticeMatrix witness = make_matrix(2, 4, {4, 1, 7, 0, -6, 1, -8, 3});
    CHECK(compute_plucker(witness) == p);
}

TEST_CASE("assemble with an empty trace returns the diagonal seed") {
    PluckerVector p = make_plucker(3, 3, {-4});
    Trace trace = minee_run(p);
    ReconstructionResult r = assemble(trace, p);
    CHECK(r.matrix == make_matrix(3, 3, {-4, 0, 0, 0, 1, 0, 0, 0, 1}));
    CHECK(r.p_hat == -4);
    CHECK(r.sublattice_index == 4);
}

TEST_CASE("assemble round trips on random runs of both algorithms") {
    std::mt19937_64 gen(71);
    for (int round = 0; round < 120; ++round) {
        int k = 1 + static_cast<int>(gen() % 3);
        int n = k + static_cast<int>(gen() % (8 - k));
        LatticeMatrix m = random_full_rank(gen, k, n, 20);
        PluckerVector p = compute_plucker(m);
        Trace trace = k == 2 && gen() % 2 == 0 ? mee_run(p) : minee_run(p);
        ReconstructionResult r = assemble(trace, p);
        CHECK(compute_plucker(r.matrix) == p);
        CHECK(r.sublattice_index == plucker_gcd(p));
    }
}

TEST_CASE("assemble input validation") {
    PluckerVector p = make_plucker(2, 4, {10, 10, 12, -15, 3, 21});
    Trace trace = mee_run(p);
    Trace incomplete = trace;
    incomplete.terminal_p_hat.reset();
    CHECK_THROWS_AS(assemble(incomplete, p), ValidationError);
    PluckerVector other = make_plucker(2, 5, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    CHECK_THROWS_AS(assemble(trace, other), DimensionError);
}

TEST_CASE("admissible_tuple") {
    PluckerVector p = make_plucker(2, 4, {10, 10, 12, -15, 3, 21});
    Trace trace = mee_run(p);
    const Int p_hat = *trace.terminal_p_hat;

    SUBCASE("diagonal seed reproduces assemble") {
        LatticeMatrix seed(2, 2);
        seed.at(0, 0) = p_hat;
        seed.at(1, 1) = 1;
        CHECK(admissible_tuple(trace, seed) == assemble(trace, p).matrix);
    }
    SUBCASE("unimodular seeds agree up to one global sign") {
        std::mt19937_64 gen(72);
        for (int round = 0; round < 100; ++round) {
            LatticeMatrix seed = random_unimodular_kxk(gen, 2);
            for (int c = 0; c < 2; ++c)
                seed.at(0, c) *= p_hat;
            LatticeMatrix out = admissible_tuple(trace, seed);
            PluckerVector q = compute_plucker(out);
            bool same = q == p;
            bool negated = true;
            for (std::size_t i = 0; i < q.size(); ++i)
                negated &= q.at_rank(i) == -p.at_rank(i);
            CHECK((same || negated));
        }
    }
    SUBCASE("determinant mismatch is rejected") {
        LatticeMatrix seed(2, 2);
        seed.at(0, 0) = p_hat + 1;
        seed.at(1, 1) = 1;
        CHECK_THROWS_AS(admissible_tuple(trace, seed), ValidationError);
    }
}

TEST_CASE("sublattice_index") {
    CHECK(sublattice_index(make_matrix(2, 4, {4, 1, 7, 0, -6, 1, -8, 3})) == 1);
    CHECK(sublattice_index(make_matrix(2, 2, {2, 0, 0, 2})) == 4);
    std::mt19937_64 gen(73);
    for (int round = 0; round < 30; ++round) {
        LatticeMatrix m = random_full_rank(gen, 2, 5, 9);
        Int base = sublattice_index(m);
        LatticeMatrix doubled = m;
        for (int c = 0; c < 5; ++c)
            doubled.at(0, c) *= 2;
        CHECK(sublattice_index(doubled) == 2 * base);
    }
    CHECK_THROWS_AS(sublattice_index(make_matrix(2, 3, {1, 2, 3, 2, 4, 6})), ValidationError);
}
