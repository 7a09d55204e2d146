#include "tcalc/lambda_coeffs.hpp"

#include <sstream>

namespace tcalc {

Int lambda3(long k) {
    if (k < 0) throw DomainError("lambda3: k must be nonnegative");
    Int acc = 0;
    Int b = 1;  // running C(k,i)
    for (long i = 0; i <= k; ++i) {
        Int cube = b * b * b;
        if (i % 2 == 0) {
            acc += cube;
        } else {
            acc -= cube;
        }
        if (i < k) {
            b *= (k - i);
            b /= (i + 1);
        }
    }
    return acc;
}

std::map<std::uint64_t, int> lambda_closed_multiplicities(long a) {
    if (a < 1) throw DomainError("closed-form multiplicities need a >= 1");
    std::map<std::uint64_t, int> out;
    for (std::uint64_t p : primes_up_to(static_cast<std::uint64_t>(3 * a))) {
        long v = factorial_valuation(3 * a, p) - 3 * factorial_valuation(a, p);
        if (v < 0) throw DomainError("negative valuation in closed form; impossible");
        if (v > 0) out[p] = static_cast<int>(v);
    }
    return out;
}

Int lambda3_closed_form(long a) {
    if (a < 1) throw DomainError("closed form needs a >= 1");
    Int v = 1;
    for (const auto& [p, e] : lambda_closed_multiplicities(a)) {
        for (int i = 0; i < e; ++i) v *= p;
    }
    return (a % 2 == 0) ? v : -v;
}

Int lambda_nk(long n, long k) {
    if (n < 2) throw DomainError("lambda_nk: n must be at least 2");
    Int base = lambda3(k);
    return (((n - 1) * k) % 2 == 0) ? base : -base;
}

LambdaFactorization factor_lambda(long k) {
    if (k < 2 || k % 2 != 0) {
        throw DomainError("factor_lambda: k must be even and >= 2 (odd k gives zero)");
    }
    const long a = k / 2;
    LambdaFactorization out;
    out.value = lambda3(k);
    out.factors = lambda_closed_multiplicities(a);

    // Cross-check against trial division of the exact summed value.
    Int abs_value = out.value < 0 ? Int(-out.value) : out.value;
    TrialFactorization trial = trial_factor(abs_value, static_cast<std::uint64_t>(3 * a));
    if (trial.cofactor != 1 || trial.factors != out.factors) {
        throw DomainError("factorization routes disagree for k = " + std::to_string(k));
    }
    for (const auto& [p, e] : out.factors) out.support.insert(p);
    return out;
}

Int lemma2_display_value(long two_k) {
    if (two_k < 2 || two_k % 2 != 0) {
        throw DomainError("display form is stated for even arguments >= 2");
    }
    const long half = two_k / 2;
    Int acc = 0;
    Int b = 1;  // running C(2k,i)
    for (long i = 0; i <= half; ++i) {
        Int cube = b * b * b;
        if (i % 2 == 0) {
            acc += cube;
        } else {
            acc -= cube;
        }
        if (i < half) {
            b *= (two_k - i);
            b /= (i + 1);
        }
    }
    return 2 * acc + b * b * b;  // b holds C(2k, k) after the loop
}

std::vector<Table1Row> table1_rows(long max_k) {
    if (max_k < 2) throw DomainError("table needs max k >= 2");
    std::vector<Table1Row> rows;
    for (long k = 2; k <= max_k; k += 2) {
        LambdaFactorization f = factor_lambda(k);
        rows.push_back(Table1Row{k, f.value, f.factors, f.support});
    }
    return rows;
}

std::string format_factorization(const std::map<std::uint64_t, int>& factors) {
    if (factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : factors) {
        if (!first) os << " * ";
        first = false;
        os << p;
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

}  // namespace tcalc
