#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tcalc/tc_series.hpp"

using namespace tcalc;

TEST_CASE("sequences under the linear growth condition") {
    TCSequence s = tc_sequence_for_condition1(2, 5);
    CHECK(s.values == std::vector<Int>{4, 6, 8, 10});  // TC_2 .. TC_5
    CHECK(s.slope == 2);
    CHECK(s.offset == 2);  // TC_{n+1} = 2n + 2
    CHECK(s.n0 == 1);

    TCSequence t = tc_sequence_for_condition1(3, 4);
    CHECK(t.values == std::vector<Int>{6, 9, 12});

    TCSequence u = tc_sequence_for_condition1(2, 2);
    CHECK(u.values == std::vector<Int>{4});

    CHECK_THROWS_AS(tc_sequence_for_condition1(1, 5), DomainError);
    CHECK_THROWS_AS(tc_sequence_for_condition1(2, 1), DomainError);
}

TEST_CASE("generating polynomial for the linear family") {
    for (long k = 2; k <= 6; ++k) {
        TCSequence s = tc_sequence_for_condition1(k, 6);
        NumeratorPolynomial poly = generating_polynomial(s);
        REQUIRE(poly.coefficients.size() == 3);
        CHECK(poly.coefficients[0] == 0);
        CHECK(poly.coefficients[1] == 2 * k);
        CHECK(poly.coefficients[2] == -k);
    }
}

TEST_CASE("numerator at one equals the eventual slope") {
    TCSequence s = tc_sequence_for_condition1(4, 6);
    CHECK(numerator_at_one(generating_polynomial(s)) == 4);
}

TEST_CASE("series expansion inverts the polynomial") {
    // P = 4x - 2x^2 over (1-x)^2 expands to 0, 4, 6, 8, ...
    NumeratorPolynomial p{{0, 4, -2}};
    CHECK(series_expand(p, 4) == std::vector<Int>{0, 4, 6, 8});

    // P = x gives the counting sequence 0, 1, 2, 3
    NumeratorPolynomial x{{0, 1}};
    CHECK(series_expand(x, 4) == std::vector<Int>{0, 1, 2, 3});

    CHECK_THROWS_AS(series_expand(p, 0), DomainError);
}

TEST_CASE("worked example with a genuine prefix") {
    TCSequence s;
    s.values = {9, 4, 6};  // off the line at TC_2, then slope 2 from n0 = 2
    s.slope = 2;
    s.offset = 0;
    s.n0 = 2;
    NumeratorPolynomial poly = generating_polynomial(s);
    REQUIRE(poly.coefficients.size() == 4);
    CHECK(poly.coefficients[0] == 0);
    CHECK(poly.coefficients[1] == 9);
    CHECK(poly.coefficients[2] == -14);
    CHECK(poly.coefficients[3] == 7);
    // round trip, continuing past the stored window
    CHECK(series_expand(poly, 6) == std::vector<Int>{0, 9, 4, 6, 8, 10});
    CHECK(numerator_at_one(poly) == 2);
}

TEST_CASE("degree bound and pole condition") {
    // a sequence that never becomes linear is rejected with the exact message
    TCSequence s;
    s.values = {1, 4, 9, 16};  // quadratic
    s.slope = 2;
    s.offset = 0;
    s.n0 = 1;
    CHECK_THROWS_WITH_AS(generating_polynomial(s),
                         "not rational with order-2 pole at 1", DomainError);

    // declared line must match every stored value from n0 on
    TCSequence t;
    t.values = {4, 6, 9};  // 9 breaks the line 2n + 2
    t.slope = 2;
    t.offset = 2;
    t.n0 = 1;
    CHECK_THROWS_WITH_AS(generating_polynomial(t),
                         "not rational with order-2 pole at 1", DomainError);
}

TEST_CASE("input validation") {
    TCSequence s;
    s.values = {};
    s.slope = 1;
    s.n0 = 1;
    CHECK_THROWS_AS(generating_polynomial(s), DomainError);

    TCSequence neg;
    neg.values = {Int(-1), Int(0)};
    neg.slope = 1;
    neg.offset = -2;
    neg.n0 = 1;
    CHECK_THROWS_AS(generating_polynomial(neg), DomainError);

    TCSequence bad_n0 = tc_sequence_for_condition1(2, 4);
    bad_n0.n0 = 0;
    CHECK_THROWS_AS(generating_polynomial(bad_n0), DomainError);
    bad_n0.n0 = 99;
    CHECK_THROWS_AS(generating_polynomial(bad_n0), DomainError);
}

TEST_CASE("randomized round trip") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> slope_dist(1, 20);
    std::uniform_int_distribution<long> offset_dist(0, 10);
    std::uniform_int_distribution<long> prefix_dist(0, 50);
    std::uniform_int_distribution<int> n0_dist(1, 4);

    for (int trial = 0; trial < 200; ++trial) {
        long slope = slope_dist(rng);
        long offset = offset_dist(rng);
        int n0 = n0_dist(rng);
        int stored = n0 + 4;  // store f(1) .. f(stored)

        TCSequence s;
        s.slope = slope;
        s.offset = offset;
        s.n0 = n0;
        for (int n = 1; n <= stored; ++n) {
            if (n < n0) {
                s.values.push_back(Int(prefix_dist(rng)));
            } else {
                s.values.push_back(Int(slope) * n + offset);
            }
        }
        NumeratorPolynomial poly = generating_polynomial(s);
        CHECK(static_cast<int>(poly.coefficients.size()) <= n0 + 2);  // degree <= n0 + 1
        CHECK(numerator_at_one(poly) == slope);
        auto g = series_expand(poly, stored + 3);
        for (int n = 1; n <= stored; ++n) {
            CHECK(g[static_cast<std::size_t>(n)] == s.values[static_cast<std::size_t>(n) - 1]);
        }
        // beyond the stored window the line continues
        CHECK(g[static_cast<std::size_t>(stored) + 1] == Int(slope) * (stored + 1) + offset);
        CHECK(g[static_cast<std::size_t>(stored) + 2] == Int(slope) * (stored + 2) + offset);
    }
}
