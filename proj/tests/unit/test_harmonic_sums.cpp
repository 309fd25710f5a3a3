#include <catch2/catch_amalgamated.hpp>

#include "fmzv/harmonic_sums.hpp"
#include "test_util.hpp"

using namespace fmzv;

TEST_CASE("harmonic sum pinned values", "[fmzv]") {
    // sum of all inverses mod 5 vanishes
    REQUIRE(fmzv_residue(Composition{1}, 5, 1) == 0);
    // single pair (1,2): 1/(1*2) = 1/2 = 2 mod 3
    REQUIRE(fmzv_residue(Composition{1, 1}, 3, 1) == 2);
    // empty composition is the empty product
    REQUIRE(fmzv_residue(Composition{}, 7, 2) == 1);
}

TEST_CASE("depth exceeding p-1 gives the empty sum", "[fmzv]") {
    REQUIRE(fmzv_residue(Composition{1, 1, 1}, 3, 1) == 0);
    REQUIRE(fmzv_residue(Composition{1, 1, 1, 1, 1, 1}, 5, 2) == 0);
}

TEST_CASE("DP agrees with nested-loop summation", "[fmzv]") {
    REQUIRE(fmzv_residue(Composition{1, 2}, 7, 2) == testutil::brute_force_fmzv(Composition{1, 2}, 7, 2));
    for (std::int64_t p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL}) {
        for (int N : {1, 2}) {
            HarmonicSumEvaluator ev(p, N);
            for (const Composition& k :
                 {Composition{1}, Composition{4}, Composition{2, 1}, Composition{1, 2},
                  Composition{2, 2, 2}, Composition{1, 1, 4}}) {
                REQUIRE(ev.eval(k) == testutil::brute_force_fmzv(k, p, N));
            }
        }
    }
}

TEST_CASE("evaluator reuses its inverse table across calls", "[fmzv]") {
    HarmonicSumEvaluator ev(101, 2);
    Int first = ev.eval(Composition{2, 1});
    REQUIRE(ev.eval(Composition{2, 1}) == first);
    REQUIRE(first == fmzv_residue(Composition{2, 1}, 101, 2));
}

TEST_CASE("harmonic sums on the big-integer path", "[fmzv]") {
    // p^N beyond 2^63 switches the DP to big integers; check against the
    // closed form for p = 3: zeta(1) = 1 + inv(2) = (3^50 + 3) / 2 mod 3^50.
    Int m = 1;
    for (int i = 0; i < 50; ++i) m *= 3;
    REQUIRE(fmzv_residue(Composition{1}, 3, 50) == (m + 3) / 2 % m);
    REQUIRE(fmzv_residue(Composition{1, 1}, 3, 50) == inv_mod_pn(2, 3, 50));
    // same DP at a modulus just under and over the crossover agree mod the smaller
    Int small = fmzv_residue(Composition{2, 1}, 13, 17);  // 13^17 < 2^63
    Int big = fmzv_residue(Composition{2, 1}, 13, 18);    // 13^18 > 2^63
    Int mod17 = 1;
    for (int i = 0; i < 17; ++i) mod17 *= 13;
    REQUIRE(big % mod17 == small);
}
