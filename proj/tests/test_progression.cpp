#include "apg/progression.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace apg;

TEST_CASE("make_prime_pair validation") {
    CHECK_NOTHROW(make_prime_pair(3, 5));
    CHECK_NOTHROW(make_prime_pair(7, 3)); // decreasing is first-class
    CHECK_THROWS_AS(make_prime_pair(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(make_prime_pair(9, 5), std::invalid_argument);
    CHECK_THROWS_AS(make_prime_pair(3, 3), std::invalid_argument);
    CHECK_NOTHROW(make_prime_pair(3, 3, /*allow_equal=*/true));
}

TEST_CASE("term formula") {
    CHECK(term(PrimePair{2, 3}, 1) == 2);
    CHECK(term(PrimePair{3, 5}, 4) == 9);
    CHECK(term(PrimePair{7, 3}, 4) == -5);
}

TEST_CASE("sum_first examples") {
    CHECK(sum_first(PrimePair{3, 5}, 2) == 8);
    CHECK(sum_first(PrimePair{11, 13}, 1) == 11);
    CHECK(sum_first(PrimePair{3, 7}, 4) == 36);
}

TEST_CASE("sum_run examples") {
    CHECK(sum_run(PrimePair{2, 3}, {2, 1}) == 7);
    CHECK(sum_run(PrimePair{5, 11}, {4, 0}) == sum_first(PrimePair{5, 11}, 4));
    CHECK(sum_run(PrimePair{3, 5}, {3, 1}) == 21);
}

TEST_CASE("sum_run_base examples") {
    CHECK(sum_run_base({2, 1}) == 7);
    CHECK(sum_run_base({1, 0}) == 2);
    CHECK(sum_run_base({5, 0}) == 20);
}

TEST_CASE("sum_twin examples") {
    CHECK(sum_twin(3, {2, 1}) == 12);
    CHECK(sum_twin(3, {3, 0}) == 15);
    CHECK(sum_twin(5, {1, 0}) == 5);
}

TEST_CASE("direct sum oracle examples") {
    CHECK(direct_sum_oracle(PrimePair{3, 5}, {2, 0}) == 8);
    CHECK(direct_sum_oracle(PrimePair{7, 3}, {4, 0}) == 4);
    CHECK(direct_sum_oracle(PrimePair{2, 3}, {5, 0}) == 20);
}

TEST_CASE("closed forms match the oracle over a prime grid") {
    std::vector<int64_t> primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
                                43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (int64_t p : primes)
        for (int64_t q : primes) {
            if (p == q) continue;
            PrimePair pair{p, q};
            for (uint64_t n = 1; n <= 12; ++n)
                for (uint64_t m = 0; m <= 12; ++m) {
                    RunWindow w{n, m};
                    int64_t oracle = direct_sum_oracle(pair, w);
                    REQUIRE(sum_run(pair, w) == oracle);
                    if (m == 0)
                        REQUIRE(sum_first(pair, n) == oracle);
                    else
                        REQUIRE(sum_first(pair, n + m) - sum_first(pair, m) ==
                                oracle);
                }
        }
}

TEST_CASE("telescoping identity") {
    PrimePair pair{13, 7};
    for (uint64_t n = 1; n <= 30; ++n)
        for (uint64_t m = 1; m <= 30; ++m)
            CHECK(sum_run(pair, {n, m}) ==
                  sum_first(pair, n + m) - sum_first(pair, m));
}

TEST_CASE("even-index identity S_{2n} = n((2n-1)q - (2n-3)p)") {
    PrimePair pair{5, 17};
    for (int64_t n = 1; n <= 40; ++n) {
        int64_t rhs = n * ((2 * n - 1) * pair.q - (2 * n - 3) * pair.p);
        CHECK(sum_first(pair, static_cast<uint64_t>(2 * n)) == rhs);
    }
}

TEST_CASE("specializations agree with sum_run") {
    for (uint64_t n = 1; n <= 20; ++n)
        for (uint64_t m = 0; m <= 20; ++m) {
            CHECK(sum_run_base({n, m}) ==
                  static_cast<uint64_t>(sum_run(PrimePair{2, 3}, {n, m})));
            CHECK(sum_twin(3, {n, m}) ==
                  static_cast<uint64_t>(sum_run(PrimePair{3, 5}, {n, m})));
            CHECK(sum_twin(11, {n, m}) ==
                  static_cast<uint64_t>(sum_run(PrimePair{11, 13}, {n, m})));
        }
}

TEST_CASE("overflow is an error, never a wraparound") {
    PrimePair pair{3, 5};
    CHECK_THROWS_AS(sum_first(pair, uint64_t(1) << 33), std::overflow_error);
    CHECK_THROWS_AS(term(PrimePair{3, 7}, uint64_t(1) << 62), std::overflow_error);
}
