#pragma once

#include <string>
#include <vector>

#include "tcalc/algebra.hpp"
#include "tcalc/char_sets.hpp"

namespace tcalc {

// Generalized Hopf invariants m_2..m_k of the spine attaching maps.
struct HopfData {
    int r = 2;
    int k = 2;
    std::vector<Int> invariants;  // index 0 holds m_2
};

// Membership in Im(h_i^r): any integer when (r in {2,4,8} and i = 2) or
// (r = 2 and i prime); otherwise multiples of i.
bool in_hopf_image(int r, int i, const Int& m);

// Componentwise-minimal positive achievable invariants:
// m_2 = 1 if r in {2,4,8} else 2; m_i = 1 if (r = 2 and i prime) else i.
HopfData min_hopf_invariants(int r, int k);

// m_2 * ... * m_k: the integer with x_1^k = product * x_k.
Int spine_power_relation(const HopfData& h);

// Primes dividing the minimal Hopf product, union primes of lambda3(k)
// (k even) or 2*lambda3(k-1) (k odd).
std::vector<std::uint64_t> excluded_characteristics(int r, int k);

struct Cell {
    int dimension = 0;
    std::string role;             // "generator" or "relator"
    Int boundary_multiplicity;    // relators: delta(cell) = mult * partner
    int boundary_partner = -1;    // index into CellStructure::cells
    bool has_hopf = false;
    Int hopf_invariant;           // spine cells of dimension i*r, i >= 2
};

struct CellStructure {
    int r = 2;
    int k = 2;
    std::string case_tag;  // "(a)" or "(b)"
    std::vector<Cell> cells;
    std::vector<std::string> notes;
};

// Case (a) (u^k of infinite order): the k-cell spine e^0, e^r, ..., e^{kr}
// with Hopf invariants scaled from the minimal ones so the product matches
// the declared q-factorization exactly when divisibility permits, else in
// prime support only (noted); unreachable support is an error.
// Case (b): spine up to lr against the u^l data, then per torsion prime p
// of degree kr one generator/relator pair in each j = l+1..k-1 (multiplicity
// p^{alpha + alpha_boost}) and a top pair at kr-1 (multiplicity p^alpha).
// relator_placement "high" puts middle pairs at jr-1, "low" at jr.
CellStructure synthesize_cell_structure(const CohomologyData& data,
                                        const std::string& relator_placement = "high",
                                        int alpha_boost = 0);

// Structural invariant violations: dimensions off the r-lattice (+-1),
// missing/duplicated bottom cells, bad relator wiring; empty when valid.
std::vector<std::string> validate_structure(const CellStructure& cs);

struct CohomologyReport {
    std::vector<long> dims;    // dim H^d for d = 0..top
    bool profile_match = false;  // dims equal the truncated-polynomial profile
    Int spine_product;
    bool unit_check = false;     // spine product invertible in the field
    std::vector<std::string> notes;
};

// Cochain dimensions over the field from the stored boundary multiplicities
// (Gaussian elimination), the profile comparison against K[u]/(u^{k+1}),
// and the spine-product unit check.
CohomologyReport cellular_cohomology(const CellStructure& cs, const FieldSpec& field);

}  // namespace tcalc
