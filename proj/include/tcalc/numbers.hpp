#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tcalc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Domain error: invalid inputs or mathematically undefined requests.
// The CLI maps these to exit code 1 with a structured error report.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Resource error: a configured cap (term budget, search cap) was exceeded.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Primes <= limit, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// The first `count` primes, ascending.
std::vector<std::uint64_t> first_primes(std::size_t count);

// Exact binomial coefficient; zero when k < 0 or k > n.
Int binomial(long n, long k);

// v_p(n!) by Legendre's formula: sum_{i>=1} floor(n / p^i).
long factorial_valuation(long n, std::uint64_t p);

// Removes every factor p <= limit from |value|; returns the multiplicity map
// and the remaining cofactor (sign dropped). Cofactor 1 means the
// factorization is complete.
struct TrialFactorization {
    std::map<std::uint64_t, int> factors;
    Int cofactor;
};
TrialFactorization trial_factor(Int value, std::uint64_t limit);

// Sorted distinct primes dividing |value|; value must be nonzero and must
// factor completely over primes <= limit.
std::vector<std::uint64_t> prime_support(const Int& value, std::uint64_t limit);

}  // namespace tcalc
