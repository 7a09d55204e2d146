#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tcalc/numbers.hpp"

using namespace tcalc;

TEST_CASE("primality on small and adversarial inputs") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(is_prime_u64(97));
    CHECK_FALSE(is_prime_u64(0));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(91));  // 7 * 13
    CHECK_FALSE(is_prime_u64(561));  // Carmichael
    CHECK_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
    CHECK(is_prime_u64(2305843009213693951ULL));  // 2^61 - 1
    CHECK_FALSE(is_prime_u64(2305843009213693951ULL - 2));
}

TEST_CASE("prime enumeration") {
    CHECK(primes_up_to(30) ==
          std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_up_to(1).empty());
    auto fp = first_primes(15);
    REQUIRE(fp.size() == 15);
    CHECK(fp.front() == 2);
    CHECK(fp.back() == 47);
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(40, 20) == Int("137846528820"));
    // Pascal identity on a grid
    for (long n = 1; n <= 30; ++n) {
        for (long k = 1; k <= n; ++k) {
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}

TEST_CASE("factorial valuations") {
    CHECK(factorial_valuation(10, 2) == 8);
    CHECK(factorial_valuation(100, 5) == 24);
    CHECK(factorial_valuation(48, 7) == 6);
    CHECK(factorial_valuation(16, 7) == 2);
    CHECK(factorial_valuation(0, 3) == 0);
}

TEST_CASE("trial factorization") {
    TrialFactorization f = trial_factor(Int(756756), 20);
    CHECK(f.cofactor == 1);
    CHECK(f.factors == std::map<std::uint64_t, int>{{2, 2}, {3, 3}, {7, 2}, {11, 1}, {13, 1}});

    TrialFactorization partial = trial_factor(Int(2 * 101), 10);
    CHECK(partial.cofactor == 101);
    CHECK(partial.factors == std::map<std::uint64_t, int>{{2, 1}});
}

TEST_CASE("prime support") {
    CHECK(prime_support(Int(90), 10) == std::vector<std::uint64_t>{2, 3, 5});
    CHECK(prime_support(Int(-90), 10) == std::vector<std::uint64_t>{2, 3, 5});
    CHECK(prime_support(Int(1), 10).empty());
    CHECK_THROWS_AS(prime_support(Int(0), 10), DomainError);
    CHECK_THROWS_AS(prime_support(Int(2 * 101), 10), DomainError);  // incomplete
}
