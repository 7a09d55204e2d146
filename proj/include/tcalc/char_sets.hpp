#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tcalc/numbers.hpp"

namespace tcalc {

struct TorsionPrimary {
    std::uint64_t prime = 0;
    int exponent = 1;
};

// Integer cohomology in degree i*r: Z^{free_rank} plus the listed primaries.
struct DegreeData {
    int i = 0;
    long free_rank = 0;
    std::vector<TorsionPrimary> torsion;
};

// Order data for u^k.  Infinite: u^k = q1^f1 ... q_g^f_g * w with w a free
// generator.  Finite: l is the greatest power of u with infinite order and
// l_q_factors the analogous data for u^l.
struct PowerOrderData {
    bool infinite = true;
    std::vector<std::pair<std::uint64_t, int>> q_factors;    // infinite case
    int l = 0;                                               // finite case
    std::vector<std::pair<std::uint64_t, int>> l_q_factors;  // finite case
};

struct CohomologyData {
    int r = 2;
    int k = 2;
    std::vector<DegreeData> degrees;  // one entry per i = 1..k
    PowerOrderData power_order;
};

// Every invariant violation, as one message per field; empty when valid.
std::vector<std::string> validate(const CohomologyData& data);

// Throws DomainError listing all violations.
void require_valid(const CohomologyData& data);

// Torsion primaries of degree i*r; empty when absent.
const std::vector<TorsionPrimary>& torsion_at(const CohomologyData& data, int i);

// Distinct primes of a factor list.  Throws on a non-prime entry.
std::vector<std::uint64_t> q_set(const std::vector<std::pair<std::uint64_t, int>>& factors);

// Distinct torsion primes.
std::vector<std::uint64_t> p_set(const std::vector<TorsionPrimary>& torsion);

// Cofinite set of admissible characteristics: all primes except `excluded`,
// plus 0 when includes_zero.
struct CofinitePrimeSet {
    bool includes_zero = false;
    std::vector<std::uint64_t> excluded;  // sorted, distinct

    bool contains(std::uint64_t characteristic) const;
};

// Case "(i)" (infinite order of u^k): {0} plus all primes outside the q-set
// of u^k.  Case "(ii)" (finite order): all primes outside
// p_set(torsion at kr) union q_set(u^l data); zero not admissible.
std::pair<std::string, CofinitePrimeSet> admissible_characteristics(const CohomologyData& data);

// 0 when case (i); otherwise the smallest admissible prime not dividing
// lambda3(k) (k even) or 2*lambda3(k-1) (k odd).
std::uint64_t select_prop1_characteristic(const CohomologyData& data);

}  // namespace tcalc
