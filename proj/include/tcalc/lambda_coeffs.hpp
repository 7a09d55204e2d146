#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tcalc/numbers.hpp"

namespace tcalc {

// lambda3(k) = sum_{i=0}^{k} (-1)^i * C(k,i)^3.  Zero for odd k.
Int lambda3(long k);

// Closed form for even k = 2a: (-1)^a * (3a)! / (a!)^3, assembled from
// per-prime Legendre valuations rather than by summation.  Independent of
// lambda3 by construction.
Int lambda3_closed_form(long a);

// Prime -> exponent map of |lambda3(2a)| via v_p((3a)!) - 3*v_p(a!),
// over all primes p <= 3a.  Zero exponents omitted.
std::map<std::uint64_t, int> lambda_closed_multiplicities(long a);

// General coefficient: lambda(n,k) = (-1)^{(n-1)k} * lambda3(k), n >= 2.
Int lambda_nk(long n, long k);

struct LambdaFactorization {
    Int value;                               // signed lambda3(k)
    std::map<std::uint64_t, int> factors;    // factorization of |value|
    std::set<std::uint64_t> support;         // primes dividing value
};

// Factor lambda3(k) for even k >= 2, computing multiplicities by the
// valuation route and verifying them against trial division of the exact
// value.  Throws DomainError if the two routes disagree or k is odd.
LambdaFactorization factor_lambda(long k);

// Value of the published boxed reformulation
//   2 * [ sum_{0<=i<=k} (-1)^i C(2k,i)^3 ] + C(2k,k)^3
// evaluated at even argument two_k = 2k.  Provided for comparison output;
// it does not agree with lambda3 beyond the first entry.
Int lemma2_display_value(long two_k);

struct Table1Row {
    long k = 0;
    Int value;
    std::map<std::uint64_t, int> factors;
    std::set<std::uint64_t> support;
};

// Rows for even k = 2, 4, ..., max_k.
std::vector<Table1Row> table1_rows(long max_k);

// Render a factorization like "2 * 3^2 * 5" (absolute value part only).
std::string format_factorization(const std::map<std::uint64_t, int>& factors);

}  // namespace tcalc
