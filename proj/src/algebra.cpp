#include "tcalc/algebra.hpp"

#include <sstream>

namespace tcalc {

namespace {

Int mod_inverse(Int a, const Int& p) {
    // Extended Euclid; p prime and a in [1, p-1].
    Int t = 0, new_t = 1;
    Int r = p, new_r = a;
    while (new_r != 0) {
        Int q = r / new_r;
        Int tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw DomainError("mod_inverse: argument shares a factor with the modulus");
    if (t < 0) t += p;
    return t;
}

}  // namespace

FieldSpec make_field(std::uint64_t characteristic) {
    if (characteristic != 0 && !is_prime_u64(characteristic)) {
        throw DomainError("field characteristic must be 0 or a prime, got " +
                          std::to_string(characteristic));
    }
    return FieldSpec{characteristic};
}

Rat field_normalize(const Rat& x, const FieldSpec& field) {
    if (field.characteristic == 0) return x;
    const Int p{field.characteristic};
    Int num = numerator(x) % p;
    if (num < 0) num += p;
    Int den = denominator(x) % p;
    if (den < 0) den += p;
    if (den == 0) {
        throw DomainError("coefficient denominator is divisible by the field characteristic");
    }
    return Rat((num * mod_inverse(den, p)) % p);
}

TruncatedAlgebra make_algebra(int r, int k, FieldSpec field, std::size_t max_terms) {
    if (r < 2 || r % 2 != 0) {
        throw DomainError("odd generator degree: graded commutativity would force u^2 = 0 "
                          "away from characteristic 2; r must be a positive even integer");
    }
    if (k < 2) throw DomainError("nilpotency index k must be at least 2");
    make_field(field.characteristic);  // re-validate
    TruncatedAlgebra a;
    a.r = r;
    a.k = k;
    a.field = field;
    a.max_terms = max_terms;
    return a;
}

TensorElement::TensorElement(TruncatedAlgebra algebra, int arity)
    : algebra_(std::move(algebra)), arity_(arity) {
    if (arity < 1) throw DomainError("tensor arity must be at least 1");
}

TensorElement TensorElement::zero(const TruncatedAlgebra& algebra, int arity) {
    return TensorElement(algebra, arity);
}

TensorElement TensorElement::one(const TruncatedAlgebra& algebra, int arity) {
    TensorElement e(algebra, arity);
    e.terms_[Exponents(arity, 0)] = 1;
    return e;
}

TensorElement TensorElement::basis_class(const TruncatedAlgebra& algebra, int arity, int i) {
    if (i < 1 || i > arity) {
        throw DomainError("basis_class slot " + std::to_string(i) + " out of range 1.." +
                          std::to_string(arity));
    }
    TensorElement e(algebra, arity);
    Exponents v(arity, 0);
    v[i - 1] = 1;
    e.terms_[v] = 1;
    return e;
}

void TensorElement::check_same_space(const TensorElement& other) const {
    if (arity_ != other.arity_) throw DomainError("tensor arity mismatch");
    if (!algebra_.compatible_with(other.algebra_)) throw DomainError("algebra mismatch");
}

void TensorElement::check_exponents(const Exponents& exponents) const {
    if (static_cast<int>(exponents.size()) != arity_) {
        throw DomainError("exponent vector length does not match arity");
    }
}

bool TensorElement::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int sum = 0;
        for (int x : e) sum += x;
        if (d == -1) d = sum;
        if (sum != d) return false;
    }
    return true;
}

int TensorElement::homogeneous_degree() const {
    if (terms_.empty()) throw DomainError("degree of the zero element is undefined");
    if (!is_homogeneous()) throw DomainError("element is not homogeneous");
    int sum = 0;
    for (int x : terms_.begin()->first) sum += x;
    return sum;
}

Rat TensorElement::coefficient_at(const Exponents& exponents) const {
    check_exponents(exponents);
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rat(0) : it->second;
}

void TensorElement::set_term(const Exponents& exponents, const Rat& coefficient) {
    check_exponents(exponents);
    for (int x : exponents) {
        if (x < 0 || x > algebra_.k) throw DomainError("exponent outside [0, k]");
    }
    Rat c = field_normalize(coefficient, algebra_.field);
    if (c == 0) {
        terms_.erase(exponents);
    } else {
        terms_[exponents] = c;
    }
}

TensorElement TensorElement::operator+(const TensorElement& other) const {
    check_same_space(other);
    TensorElement out = *this;
    for (const auto& [e, c] : other.terms_) {
        Rat sum = field_normalize(out.coefficient_at(e) + c, algebra_.field);
        if (sum == 0) {
            out.terms_.erase(e);
        } else {
            out.terms_[e] = sum;
        }
    }
    return out;
}

TensorElement TensorElement::operator-() const {
    TensorElement out(algebra_, arity_);
    for (const auto& [e, c] : terms_) {
        out.terms_[e] = field_normalize(-c, algebra_.field);
    }
    return out;
}

TensorElement TensorElement::operator-(const TensorElement& other) const {
    return *this + (-other);
}

TensorElement TensorElement::scaled(const Rat& c) const {
    Rat cn = field_normalize(c, algebra_.field);
    TensorElement out(algebra_, arity_);
    if (cn == 0) return out;
    for (const auto& [e, coeff] : terms_) {
        Rat v = field_normalize(coeff * cn, algebra_.field);
        if (v != 0) out.terms_[e] = v;
    }
    return out;
}

TensorElement TensorElement::operator*(const TensorElement& other) const {
    check_same_space(other);
    TensorElement out(algebra_, arity_);
    const int k = algebra_.k;
    Exponents sum(arity_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            bool dead = false;
            for (int i = 0; i < arity_; ++i) {
                sum[i] = ea[i] + eb[i];
                if (sum[i] > k) {  // truncation: u^{k+1} = 0 slotwise
                    dead = true;
                    break;
                }
            }
            if (dead) continue;
            auto [it, inserted] = out.terms_.try_emplace(sum, 0);
            it->second = field_normalize(it->second + ca * cb, algebra_.field);
            if (it->second == 0) {
                out.terms_.erase(it);
            } else if (out.terms_.size() > algebra_.max_terms) {
                throw ResourceError("term budget exceeded (" +
                                    std::to_string(algebra_.max_terms) + " terms)");
            }
        }
    }
    return out;
}

TensorElement TensorElement::pow(long m) const {
    if (m < 0) throw DomainError("negative power");
    TensorElement out = one(algebra_, arity_);
    for (long i = 0; i < m; ++i) out = out * *this;
    return out;
}

bool TensorElement::operator==(const TensorElement& other) const {
    return arity_ == other.arity_ && algebra_.compatible_with(other.algebra_) &&
           terms_ == other.terms_;
}

TensorElement TensorElement::diagonal_image() const {
    TruncatedAlgebra target = algebra_;
    TensorElement out(target, 1);
    for (const auto& [e, c] : terms_) {
        int total = 0;
        for (int x : e) total += x;
        if (total > algebra_.k) continue;
        Exponents key{total};
        auto [it, inserted] = out.terms_.try_emplace(key, 0);
        it->second = field_normalize(it->second + c, algebra_.field);
        if (it->second == 0) out.terms_.erase(it);
    }
    return out;
}

std::string TensorElement::to_text() const {
    if (terms_.empty()) return "0\n";
    std::ostringstream os;
    for (const auto& [e, c] : terms_) {
        os << c << " * ";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i > 0) os << "(x)";
            os << "u^" << e[i];
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace tcalc
