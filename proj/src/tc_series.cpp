#include "tcalc/tc_series.hpp"

namespace tcalc {

TCSequence tc_sequence_for_condition1(long k, long m) {
    if (k < 2) throw DomainError("condition (1) needs k >= 2");
    if (m < 2) throw DomainError("sequence needs m >= 2");
    TCSequence s;
    for (long n = 2; n <= m; ++n) s.values.push_back(Int(n) * k);
    s.slope = k;
    s.offset = k;  // TC_{n+1} = k*n + k
    s.n0 = 1;
    return s;
}

namespace {

// f(n): the x^n coefficient of F.  No TC_1 term, so f(n <= 0) = 0.
Int coeff(const TCSequence& s, long n) {
    if (n <= 0) return 0;
    if (n <= static_cast<long>(s.values.size())) return s.values[n - 1];
    return s.slope * n + s.offset;
}

}  // namespace

NumeratorPolynomial generating_polynomial(const TCSequence& seq) {
    if (seq.values.empty()) throw DomainError("empty TC sequence");
    if (seq.n0 < 1 || seq.n0 > static_cast<int>(seq.values.size()) + 1) {
        throw DomainError("n0 must lie in 1..m");
    }
    for (std::size_t j = 0; j < seq.values.size(); ++j) {
        if (seq.values[j] < 0) throw DomainError("TC values must be non-negative");
    }
    // Declared linear form must hold on the stored prefix from n0 on.
    for (long n = seq.n0; n <= static_cast<long>(seq.values.size()); ++n) {
        if (coeff(seq, n) != seq.slope * n + seq.offset) {
            throw DomainError("not rational with order-2 pole at 1");
        }
    }

    NumeratorPolynomial p;
    // (1-x)^2 * F has vanishing coefficients beyond n0 + 1.
    for (long n = 0; n <= seq.n0 + 1; ++n) {
        p.coefficients.push_back(coeff(seq, n) - 2 * coeff(seq, n - 1) + coeff(seq, n - 2));
    }
    while (!p.coefficients.empty() && p.coefficients.back() == 0) p.coefficients.pop_back();
    return p;
}

std::vector<Int> series_expand(const NumeratorPolynomial& p, int n) {
    if (n < 1) throw DomainError("series length must be >= 1");
    std::vector<Int> out(n, 0);
    for (int i = 0; i < n; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < p.coefficients.size() && static_cast<int>(j) <= i; ++j) {
            acc += p.coefficients[j] * (i - static_cast<int>(j) + 1);
        }
        out[i] = acc;
    }
    return out;
}

Int numerator_at_one(const NumeratorPolynomial& p) {
    Int acc = 0;
    for (const auto& c : p.coefficients) acc += c;
    return acc;
}

}  // namespace tcalc
