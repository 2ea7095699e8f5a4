#include <doctest.h>

#include <cstdint>
#include <limits>
#include <random>

#include "finearith/divisor.hpp"
#include "finearith/series.hpp"

using namespace finearith;

namespace {

PowerSeries from(std::vector<std::int64_t> c) {
    PowerSeries s;
    s.coeffs = std::move(c);
    return s;
}

PowerSeries random_series(std::mt19937& rng, int order, std::int64_t mag) {
    std::uniform_int_distribution<std::int64_t> dist(-mag, mag);
    PowerSeries s = constant(0, order);
    for (auto& c : s.coeffs)
        c = dist(rng);
    return s;
}

} // namespace

TEST_CASE("constant") {
    CHECK(constant(1, 4).coeffs == std::vector<std::int64_t>{1, 0, 0, 0, 0});
    CHECK(constant(0, 2).coeffs == std::vector<std::int64_t>{0, 0, 0});
    CHECK(constant(-3, 0).coeffs == std::vector<std::int64_t>{-3});
    CHECK_THROWS_AS(constant(1, -1), std::invalid_argument);
}

TEST_CASE("multiply basics") {
    const PowerSeries s = from({1, 1, 2, 0, 2});
    CHECK(multiply(s, s).coeffs == std::vector<std::int64_t>{1, 2, 5, 4, 8});
    CHECK(multiply(s, constant(1, 4)) == s);
    CHECK(multiply(from({0, 1}), from({0, 1})).coeffs == std::vector<std::int64_t>{0, 0});
    CHECK_THROWS_AS(multiply(s, constant(1, 3)), std::invalid_argument);
}

TEST_CASE("multiply ring laws on random series") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 100; ++iter) {
        const int order = 1 + static_cast<int>(rng() % 40);
        const PowerSeries a = random_series(rng, order, 50);
        const PowerSeries b = random_series(rng, order, 50);
        const PowerSeries c = random_series(rng, order, 50);
        CHECK(multiply(a, b) == multiply(b, a));
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}

TEST_CASE("apply_factor") {
    CHECK(apply_factor(from({1, 0, 0, 0}), {1, -1}).coeffs
          == std::vector<std::int64_t>{1, 1, 1, 1});
    CHECK(apply_factor(from({1, 1, 1, 1}), {1, +1}).coeffs
          == std::vector<std::int64_t>{1, 0, 0, 0});
    CHECK(apply_factor(from({1, 0, 0, 0, 0}), {3, +2}).coeffs
          == std::vector<std::int64_t>{1, 0, 0, -2, 0});
    CHECK_THROWS_AS(apply_factor(from({1}), {0, 1}), std::invalid_argument);
}

TEST_CASE("apply_factor round trip on random series") {
    std::mt19937 rng(42);
    for (int iter = 0; iter < 300; ++iter) {
        const int order = static_cast<int>(rng() % 201);
        const std::int64_t stride = 1 + static_cast<std::int64_t>(rng() % 20);
        const PowerSeries s = random_series(rng, order, 1000);
        CHECK(apply_factor(apply_factor(s, {stride, -1}), {stride, +1}) == s);
    }
}

TEST_CASE("apply_factor agrees with explicit polynomial multiplication") {
    // Independent route: (1 - q^a)^{-1} as a truncated geometric series fed
    // through the generic Cauchy product.
    std::mt19937 rng(11);
    for (int iter = 0; iter < 50; ++iter) {
        const int order = 5 + static_cast<int>(rng() % 40);
        const std::int64_t stride = 1 + static_cast<std::int64_t>(rng() % 8);
        const PowerSeries s = random_series(rng, order, 100);

        PowerSeries geom = constant(0, order);
        for (std::int64_t i = 0; i <= order; i += stride)
            geom.coeffs[i] = 1;
        CHECK(apply_factor(s, {stride, -1}) == multiply(s, geom));

        PowerSeries binom = constant(1, order);
        if (stride <= order)
            binom.coeffs[stride] = -1;
        CHECK(apply_factor(s, {stride, +1}) == multiply(s, binom));
    }
}

TEST_CASE("fine_product known prefix") {
    CHECK(fine_product(3, 1, 4).coeffs == std::vector<std::int64_t>{1, 1, 2, 0, 2});
    CHECK(fine_product(3, 1, 2).coeffs == std::vector<std::int64_t>{1, 1, 2});
    for (auto [p, r] : {std::pair<std::int64_t, std::int64_t>{2, 1}, {5, 3}, {7, 2}, {12, 5}}) {
        CHECK(fine_product(p, r, 0).coeffs == std::vector<std::int64_t>{1});
        CHECK(fine_product(p, r, 30).coeffs[0] == 1);
    }
    CHECK_THROWS_AS(fine_product(3, 3, 5), std::invalid_argument);
    CHECK_THROWS_AS(fine_product(3, 0, 5), std::invalid_argument);
}

TEST_CASE("fine_product coefficients are divisor-bounded") {
    for (auto [p, r] : {std::pair<std::int64_t, std::int64_t>{3, 1}, {5, 3}, {11, 7}}) {
        const PowerSeries s = fine_product(p, r, 120);
        for (std::int64_t n = 0; n <= 120; ++n) {
            const std::int64_t arg = 2 * p * n + r * (p - r);
            const std::int64_t bound =
                static_cast<std::int64_t>(divisors(arg).size());
            const std::int64_t c = s.coeffs[n];
            CHECK((c < 0 ? -c : c) <= bound);
        }
    }
}

TEST_CASE("shift") {
    CHECK(shift(from({1, 2, 5}), 1).coeffs == std::vector<std::int64_t>{0, 1, 2});
    const PowerSeries s = from({1, 1, 2, 0, 2});
    CHECK(shift(s, 0) == s);
    CHECK(shift(square(s), 1).coeffs == std::vector<std::int64_t>{0, 1, 2, 5, 4});
    CHECK_THROWS_AS(shift(from({1, 2}), 2), std::invalid_argument);
}

TEST_CASE("overflow fails loudly") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(multiply(from({big, big}), from({2, 0})), std::overflow_error);
    CHECK_THROWS_AS(apply_factor(from({big, big}), {1, -1}), std::overflow_error);
    CHECK_THROWS_AS(apply_factor(from({big, -big}), {1, +1}), std::overflow_error);
}
