#include "tcalc/numbers.hpp"

namespace tcalc {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set decides primality exactly for every 64-bit integer.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> sieve(limit + 1, true);
    sieve[0] = sieve[1] = false;
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (!sieve[i]) continue;
        for (std::uint64_t j = i * i; j <= limit; j += i) sieve[j] = false;
    }
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (sieve[i]) out.push_back(i);
    }
    return out;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
    std::vector<std::uint64_t> out;
    out.reserve(count);
    std::uint64_t n = 2;
    while (out.size() < count) {
        if (is_prime_u64(n)) out.push_back(n);
        ++n;
    }
    return out;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;  // exact: product of j consecutive integers is divisible by j!
    }
    return result;
}

long factorial_valuation(long n, std::uint64_t p) {
    if (p < 2) throw DomainError("factorial_valuation: p must be at least 2");
    long total = 0;
    std::uint64_t q = p;
    while (q <= static_cast<std::uint64_t>(n)) {
        total += n / static_cast<long>(q);
        if (q > static_cast<std::uint64_t>(n) / p) break;  // q*p would overflow past n
        q *= p;
    }
    return total;
}

TrialFactorization trial_factor(Int value, std::uint64_t limit) {
    TrialFactorization out;
    if (value < 0) value = -value;
    if (value == 0) {
        out.cofactor = 0;
        return out;
    }
    for (std::uint64_t p : primes_up_to(limit)) {
        if (value == 1) break;
        int mult = 0;
        while (value % p == 0) {
            value /= p;
            ++mult;
        }
        if (mult > 0) out.factors[p] = mult;
    }
    out.cofactor = value;
    return out;
}

std::vector<std::uint64_t> prime_support(const Int& value, std::uint64_t limit) {
    if (value == 0) throw DomainError("prime_support: value is zero");
    TrialFactorization f = trial_factor(value, limit);
    if (f.cofactor != 1) {
        throw DomainError("prime_support: value has a prime factor above " + std::to_string(limit));
    }
    std::vector<std::uint64_t> out;
    out.reserve(f.factors.size());
    for (const auto& [p, mult] : f.factors) out.push_back(p);
    return out;
}

}  // namespace tcalc
