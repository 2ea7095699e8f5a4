#include <doctest.h>

#include <cstdint>
#include <random>

#include "finearith/checked.hpp"
#include "finearith/divisor.hpp"

using namespace finearith;

TEST_CASE("divisors") {
    CHECK(divisors(14) == std::vector<std::int64_t>{1, 2, 7, 14});
    CHECK(divisors(1) == std::vector<std::int64_t>{1});
    CHECK(divisors(8) == std::vector<std::int64_t>{1, 2, 4, 8});
    CHECK(divisors(36) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 9, 12, 18, 36});
    CHECK_THROWS_AS(divisors(0), std::invalid_argument);
}

TEST_CASE("class_count") {
    CHECK(class_count(14, 1, 6) == 2); // divisors 1 and 7
    CHECK(class_count(14, 5, 6) == 0);
    CHECK(class_count(1, 1, 1) == 1);  // mod 1, every divisor counts
    CHECK(class_count(14, -1, 6) == 0); // normalized to residue 5
    CHECK_THROWS_AS(class_count(14, 1, 0), std::invalid_argument);
}

TEST_CASE("excess") {
    CHECK(excess(2, 1, 6) == 1);
    CHECK(excess(20, 1, 6) == 0);
    CHECK(excess(14, 1, 6) == 2);
}

TEST_CASE("excess antisymmetry and divisor bound") {
    std::mt19937 rng(5);
    for (int iter = 0; iter < 400; ++iter) {
        const std::int64_t n = 1 + rng() % 2000;
        const std::int64_t m = 2 + rng() % 20;
        const std::int64_t r = 1 + rng() % (m - 1);
        CHECK(excess(n, r, m) == -excess(n, m - r, m));
        const std::int64_t e = excess(n, r, m);
        CHECK((e < 0 ? -e : e) <= static_cast<std::int64_t>(divisors(n).size()));
    }
}

TEST_CASE("excess_table matches pointwise excess") {
    const auto table = excess_table(3000, 5, 14);
    std::mt19937 rng(17);
    for (int iter = 0; iter < 200; ++iter) {
        const std::int64_t n = 1 + rng() % 3000;
        CHECK(table[n] == excess(n, 5, 14));
    }
    const auto table1 = excess_table(50, 1, 1);
    for (std::int64_t n = 1; n <= 50; ++n)
        CHECK(table1[n] == 0); // residues r and -r coincide mod 1
}

TEST_CASE("fine1_coefficient") {
    const FineParams params(3, 1);
    CHECK(fine1_coefficient(params, 0) == 1);
    CHECK(fine1_coefficient(params, 2) == 2);
    CHECK(fine1_coefficient(params, 3) == 0);
    CHECK_THROWS_AS(fine1_coefficient(FineParams(3, 2), 0), std::invalid_argument);
}

TEST_CASE("FineParams levels") {
    CHECK(FineParams(3, 1).level() == ParamLevel::Strong);
    CHECK(FineParams(3, 2).level() == ParamLevel::Weak); // r even
    CHECK(FineParams(5, 3).level() == ParamLevel::Strong);
    CHECK(FineParams(9, 5).level() == ParamLevel::Strong); // composite p
    CHECK_THROWS_AS(FineParams(4, 2), std::invalid_argument); // gcd(2,4) = 2
    CHECK_THROWS_AS(FineParams(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(FineParams(1, 1), std::invalid_argument);
}

TEST_CASE("fine2_coefficient") {
    CHECK(fine2_coefficient(FineParams(3, 1), 1) == 1);
    CHECK(fine2_coefficient(FineParams(3, 1), 3) == 5);
    // negative discriminant: pn - r^2 = -4, no divisor of 4 is 3 mod 5
    CHECK(fine2_coefficient(FineParams(5, 3), 1) == 0);
    CHECK_THROWS_AS(fine2_coefficient(FineParams(3, 1), 0), std::invalid_argument);
}

TEST_CASE("fine2_table matches pointwise fine2_coefficient") {
    for (auto [p, r] : {std::pair<std::int64_t, std::int64_t>{3, 1}, {3, 2},
                        {5, 3}, {7, 5}, {12, 11}, {9, 4}}) {
        const FineParams params(p, r);
        const auto table = fine2_table(params, 200);
        for (std::int64_t n = 1; n <= 200; ++n)
            CHECK(table[n] == fine2_coefficient(params, n));
    }
}
