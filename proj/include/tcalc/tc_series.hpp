#pragma once

#include <vector>

#include "tcalc/numbers.hpp"

namespace tcalc {

// Eventually arithmetic TC sequence.  values[j] = TC_{j+2}, so values[j]
// is the x^{j+1} coefficient of F(x) = sum_{n>=1} TC_{n+1} x^n.  From index
// n >= n0 the sequence follows TC_{n+1} = slope * n + offset.
struct TCSequence {
    std::vector<Int> values;  // TC_2 .. TC_m
    Int slope = 0;
    Int offset = 0;
    int n0 = 1;
};

// The condition-(1) family TC_n = n*k: values (2k, 3k, ..., m*k),
// slope k, offset k, arithmetic from the start.
TCSequence tc_sequence_for_condition1(long k, long m);

// P with F(x) = P(x) / (1-x)^2, ascending coefficients, P(0) = 0.
struct NumeratorPolynomial {
    std::vector<Int> coefficients;
};

// P = (1-x)^2 * F, exact.  The x^0 coefficient of F is 0 (there is no TC_1
// term), and coefficients of P vanish beyond n0+1.  Throws
// "not rational with order-2 pole at 1" when the stored prefix does not
// agree with the declared eventual linear form.
NumeratorPolynomial generating_polynomial(const TCSequence& seq);

// First n coefficients of P(x)/(1-x)^2 via the Cauchy product with
// sum (n+1) x^n.
std::vector<Int> series_expand(const NumeratorPolynomial& p, int n);

// P(1): equals the eventual slope of the expanded sequence.
Int numerator_at_one(const NumeratorPolynomial& p);

}  // namespace tcalc
