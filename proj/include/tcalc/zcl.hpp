#pragma once

#include <string>
#include <vector>

#include "tcalc/algebra.hpp"
#include "tcalc/lambda_coeffs.hpp"

namespace tcalc {

// True iff the n-fold multiplication map (sum exponent slots, truncate
// above k) sends the element to zero.
bool diagonal_kernel_check(const TensorElement& a);

// xi = [ (prod_{i=2..n} (A1 - Ai)) * (A2 - A3) ]^k for n >= 3.
// For n = 2 the degenerate form (A1 - A2)^{2k}.
// Lives in top degree nk, so it is always a scalar multiple of u^k(x)...(x)u^k.
TensorElement xi(int n, const TruncatedAlgebra& algebra);

// mu = xi-with-exponent-(k-1) * prod_{i=2..n} (A1 - Ai), n >= 3,
// evaluated inside the same truncated algebra.
TensorElement mu(int n, const TruncatedAlgebra& algebra);

struct WitnessCertificate {
    WitnessCertificate(const TruncatedAlgebra& algebra, int arity)
        : n(arity), k(algebra.k), field(algebra.field),
          product(TensorElement::zero(algebra, arity)) {}

    int n = 0;
    int k = 0;
    FieldSpec field;
    std::string route;                      // "square", "xi" or "mu"
    std::vector<std::string> factor_names;  // in multiplication order
    std::vector<TensorElement> factors;
    TensorElement product;     // exact product over the given field
    bool product_nonzero = false;
    int witness_length = 0;    // = factors.size()
    Rat top_coefficient;       // coefficient at (k,...,k) in the product
    Int predicted_integer;     // closed-form constant for the route, over Z
    bool routes_agree = false; // predicted_integer reduced into the field
                               // matches the engine product
};

// Builds the nk-factor witness: (A1-A2)^{2k} for n=2; the factors of xi for
// even k; the factors of mu*(A1-An) for odd k.  Every factor is verified to
// lie in the kernel of the multiplication map.  route_override may force
// "square", "xi" or "mu"; "auto" (default) picks by the rule above.
// For the "mu" route predicted_integer carries the published constant
// 2*(-1)^{n-1}*lambda3(k-1); routes_agree records whether the engine agrees.
WitnessCertificate zcl_witness(int n, const TruncatedAlgebra& algebra,
                               const std::string& route_override = "auto");

// Brute-force lower-bound oracle: the exact maximum j <= max_len such that
// some product of j homogeneous kernel elements from the candidate pool is
// nonzero.  Candidate pool per degree d:
//   d <= k, #monomials <= 9 : all {-1,0,1} coefficient vectors over the
//                             monomial basis with coordinate sum 0, deduped
//                             up to global sign;
//   d <= k, #monomials  > 9 : all pairwise monomial differences;
//   d  > k                  : single monomials (the whole degree component
//                             is already in the kernel).
// This restriction means the result is a certified lower bound for the true
// supremum, exact for products of elements of this shape.
// Hard caps: (k+1)^n <= 125 and max_len <= 8; exceeding either is an error.
int exhaustive_zcl(int n, const TruncatedAlgebra& algebra, int max_len);

}  // namespace tcalc
