#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tcalc/numbers.hpp"

namespace tcalc {

// Coefficient field: characteristic 0 (exact rationals) or a prime p
// (canonical residues; stored nonzero residues lie in [1, p-1]).
struct FieldSpec {
    std::uint64_t characteristic = 0;

    bool operator==(const FieldSpec&) const = default;
};

FieldSpec make_field(std::uint64_t characteristic);

// Canonical form of x in the field: unchanged in characteristic 0, else the
// residue a * b^{-1} mod p of x = a/b. Throws when p divides b.
Rat field_normalize(const Rat& x, const FieldSpec& field);

// The graded algebra K[u]/(u^{k+1}) with generator degree r (even) and a
// term budget shared by every product computed in it.
struct TruncatedAlgebra {
    int r = 2;
    int k = 2;
    FieldSpec field;
    std::size_t max_terms = 10'000'000;

    bool compatible_with(const TruncatedAlgebra& other) const {
        return r == other.r && k == other.k && field == other.field;
    }
};

TruncatedAlgebra make_algebra(int r, int k, FieldSpec field,
                              std::size_t max_terms = 10'000'000);

using Exponents = std::vector<int>;

// Sparse element of the n-fold tensor power of a TruncatedAlgebra, keyed by
// exponent vectors in lexicographic order. Zero coefficients are never
// stored; every mutation normalizes into the coefficient field.
class TensorElement {
  public:
    TensorElement(TruncatedAlgebra algebra, int arity);

    static TensorElement zero(const TruncatedAlgebra& algebra, int arity);
    static TensorElement one(const TruncatedAlgebra& algebra, int arity);
    // A_i = 1 x ... x u (slot i) x ... x 1
    static TensorElement basis_class(const TruncatedAlgebra& algebra, int arity, int i);

    int arity() const { return arity_; }
    const TruncatedAlgebra& algebra() const { return algebra_; }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Total exponent degree; r-scaled degrees are r * this. Throws on the
    // zero element or inhomogeneous input when require_homogeneous.
    bool is_homogeneous() const;
    int homogeneous_degree() const;

    Rat coefficient_at(const Exponents& exponents) const;
    void set_term(const Exponents& exponents, const Rat& coefficient);

    TensorElement operator+(const TensorElement& other) const;
    TensorElement operator-(const TensorElement& other) const;
    TensorElement operator-() const;
    TensorElement operator*(const TensorElement& other) const;
    TensorElement scaled(const Rat& c) const;
    TensorElement pow(long m) const;

    bool operator==(const TensorElement& other) const;

    // Image under the n-fold multiplication map to the arity-1 algebra:
    // sum the slots of each exponent vector and truncate above k.
    TensorElement diagonal_image() const;

    // One line per term, lexicographic: "c * u^e1(x)u^e2(x)...".
    std::string to_text() const;

  private:
    void check_same_space(const TensorElement& other) const;
    void check_exponents(const Exponents& exponents) const;

    TruncatedAlgebra algebra_;
    int arity_;
    std::map<Exponents, Rat> terms_;
};

}  // namespace tcalc
