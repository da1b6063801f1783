#include "zarank/params.hpp"

#include <doctest.h>

#include <random>

using namespace zarank;

TEST_CASE("residues on known inputs") {
    Residues r = residues({2, 1, 5, 7});
    CHECK(r.alpha == 0);  // k-2 = 0 forces alpha = 0
    CHECK(r.beta == 0);   // lambda(m-1) = 4 is even
    CHECK(r.d == 1);      // (10 - 7) mod 2

    CHECK(alpha_of(7, 1, 99) == 2);  // 98 mod 6
    CHECK(beta_of(6, 1, 99) == 4);   // 98 + 4 == 0 (mod 6)
    CHECK(d_of(6, 1, 99, 235) == 0);  // 4851 - 15*235 = 1326 == 0 (mod 6)
}

TEST_CASE("alpha is an error at k = 1") {
    CHECK_THROWS_AS(alpha_of(1, 1, 5), std::domain_error);
    CHECK_THROWS_AS(residues({1, 1, 5, 5}), std::domain_error);
    CHECK(beta_of(1, 3, 17) == 0);
    CHECK(d_of(1, 3, 17, 9) == 0);
}

TEST_CASE("regime thresholds on known inputs") {
    RegimeThresholds t = regime_thresholds(6, 1, 99);
    CHECK(t.L1 == Rat(231));
    CHECK(t.L2 == Rat(5247, 21));
    CHECK(t.L2 - t.L1 == Rat(4 * 99, 21));  // beta*m/C(k+1,2)

    RegimeThresholds u = regime_thresholds(2, 1, 5);
    CHECK(u.L3 == u.L4);  // alpha = 0 collapses the upper gap
    CHECK(u.L4 == Rat(10));
}

TEST_CASE("regime floor error carries the least valid m") {
    try {
        regime_thresholds(6, 1, 10);
        FAIL("expected BelowRegimeFloor");
    } catch (const BelowRegimeFloor& e) {
        CHECK(e.min_valid_m == 31);  // 6*5/1 + 1
    }
    CHECK(regime_floor_m(6, 4) == 9);  // ceil(30/4) + 1
    CHECK_NOTHROW(regime_thresholds(6, 1, 31));
}

TEST_CASE("threshold ordering L1 <= L2 <= L3 <= L4 over random valid inputs") {
    std::mt19937_64 rng(20240917);
    std::uniform_int_distribution<long long> kd(2, 12), ld(1, 5), md(2, 500);
    int checked = 0;
    while (checked < 10'000) {
        long long k = kd(rng), lambda = ld(rng), m = md(rng);
        if (m < regime_floor_m(k, lambda)) continue;
        RegimeThresholds t = regime_thresholds(k, lambda, m);
        CHECK(t.L1 <= t.L2);
        CHECK(t.L2 <= t.L3);
        CHECK(t.L3 <= t.L4);
        ++checked;
    }
}

TEST_CASE("lambda(m-1) == alpha*k + beta*(k-1) mod k(k-1)") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> kd(2, 12), ld(1, 9), md(1, 2000);
    for (int i = 0; i < 5000; ++i) {
        long long k = kd(rng), lambda = ld(rng), m = md(rng);
        Int lm1 = I(lambda) * I(m - 1);
        Int combo = I(alpha_of(k, lambda, m)) * I(k) + I(beta_of(k, lambda, m)) * I(k - 1);
        CHECK(mod_floor(lm1 - combo, I(k * (k - 1))) == 0);
    }
}

TEST_CASE("incremental d updates agree with recomputation") {
    // Stepping n by one subtracts C(k,2) mod k from d.
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> kd(1, 10), ld(1, 4), md(2, 60);
    for (int i = 0; i < 2000; ++i) {
        long long k = kd(rng), lambda = ld(rng), m = md(rng);
        long long d = d_of(k, lambda, m, 1);
        for (long long n = 2; n < 30; ++n) {
            d = to_ll(mod_floor(I(d) - binom2(k), I(k)));
            CHECK(d == d_of(k, lambda, m, n));
        }
    }
}

TEST_CASE("params validation") {
    CHECK_THROWS_AS(validate_positive({0, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(validate_positive({1, 1, -3, 1}), std::invalid_argument);
    CHECK_NOTHROW(validate_positive({1, 1, 1, 1}));
}
