#include "tcalc/zcl.hpp"

#include <algorithm>

namespace tcalc {

namespace {

TensorElement difference(const TruncatedAlgebra& algebra, int n, int i, int j) {
    return TensorElement::basis_class(algebra, n, i) - TensorElement::basis_class(algebra, n, j);
}

std::string difference_name(int i, int j) {
    return "A" + std::to_string(i) + " - A" + std::to_string(j);
}

// The n factors of one bracket [ (A1-A2)...(A1-An) (A2-A3) ].
void append_bracket(const TruncatedAlgebra& algebra, int n,
                    std::vector<TensorElement>& factors, std::vector<std::string>& names) {
    for (int i = 2; i <= n; ++i) {
        factors.push_back(difference(algebra, n, 1, i));
        names.push_back(difference_name(1, i));
    }
    factors.push_back(difference(algebra, n, 2, 3));
    names.push_back(difference_name(2, 3));
}

void gen_monomials(int n, int k, int degree, int slot, Exponents& cur,
                   std::vector<Exponents>& out) {
    if (slot == n) {
        if (degree == 0) out.push_back(cur);
        return;
    }
    int remaining_slots = n - slot - 1;
    for (int e = 0; e <= std::min(k, degree); ++e) {
        if (degree - e > remaining_slots * k) continue;
        cur[slot] = e;
        gen_monomials(n, k, degree - e, slot + 1, cur, out);
    }
    cur[slot] = 0;
}

struct Search {
    std::vector<std::vector<TensorElement>> cands;  // index = degree
    int total_degree = 0;
    int max_len = 0;
    int best = 0;

    void dfs(const TensorElement& prod, int len, int deg_used, int d0, int i0) {
        best = std::max(best, len);
        if (best == max_len) return;
        for (int d = d0; d <= total_degree - deg_used; ++d) {
            const auto& pool = cands[d];
            for (int i = (d == d0 ? i0 : 0); i < static_cast<int>(pool.size()); ++i) {
                TensorElement next = prod * pool[i];
                if (next.is_zero()) continue;
                dfs(next, len + 1, deg_used + d, d, i);
                if (best == max_len) return;
            }
        }
    }
};

}  // namespace

bool diagonal_kernel_check(const TensorElement& a) {
    return a.diagonal_image().is_zero();
}

TensorElement xi(int n, const TruncatedAlgebra& algebra) {
    if (n < 2) throw DomainError("xi needs n >= 2");
    if (n == 2) {
        return difference(algebra, 2, 1, 2).pow(2L * algebra.k);
    }
    TensorElement bracket = TensorElement::one(algebra, n);
    for (int i = 2; i <= n; ++i) bracket = bracket * difference(algebra, n, 1, i);
    bracket = bracket * difference(algebra, n, 2, 3);
    return bracket.pow(algebra.k);
}

TensorElement mu(int n, const TruncatedAlgebra& algebra) {
    if (n < 3) throw DomainError("mu needs n >= 3");
    if (algebra.k < 2) throw DomainError("mu needs k >= 2");
    TensorElement bracket = TensorElement::one(algebra, n);
    for (int i = 2; i <= n; ++i) bracket = bracket * difference(algebra, n, 1, i);
    bracket = bracket * difference(algebra, n, 2, 3);
    TensorElement out = bracket.pow(algebra.k - 1);
    for (int i = 2; i <= n; ++i) out = out * difference(algebra, n, 1, i);
    return out;
}

WitnessCertificate zcl_witness(int n, const TruncatedAlgebra& algebra,
                               const std::string& route_override) {
    if (n < 2) throw DomainError("witness needs n >= 2");
    const int k = algebra.k;

    std::string route = route_override;
    if (route == "auto") {
        route = (n == 2) ? "square" : (k % 2 == 0 ? "xi" : "mu");
    }
    if (n == 2 && route == "xi") route = "square";  // degenerate form
    if (route == "square" && n != 2) throw DomainError("square route is the n = 2 case");
    if (route == "mu" && n < 3) throw DomainError("mu route needs n >= 3");
    if (route != "square" && route != "xi" && route != "mu") {
        throw DomainError("unknown route '" + route + "'");
    }

    WitnessCertificate cert(algebra, n);
    cert.route = route;

    if (route == "square") {
        for (int i = 0; i < 2 * k; ++i) {
            cert.factors.push_back(difference(algebra, 2, 1, 2));
            cert.factor_names.push_back(difference_name(1, 2));
        }
        Int c = binomial(2L * k, k);
        cert.predicted_integer = (k % 2 == 0) ? c : Int(-c);
    } else if (route == "xi") {
        for (int rep = 0; rep < k; ++rep) append_bracket(algebra, n, cert.factors, cert.factor_names);
        cert.predicted_integer = lambda_nk(n, k);
    } else {
        for (int rep = 0; rep < k - 1; ++rep) append_bracket(algebra, n, cert.factors, cert.factor_names);
        for (int i = 2; i <= n; ++i) {
            cert.factors.push_back(difference(algebra, n, 1, i));
            cert.factor_names.push_back(difference_name(1, i));
        }
        cert.factors.push_back(difference(algebra, n, 1, n));
        cert.factor_names.push_back(difference_name(1, n));
        Int published = 2 * lambda3(k - 1);
        cert.predicted_integer = (n % 2 == 1) ? published : Int(-published);
    }

    const int expected_len = (n == 2) ? 2 * k : n * k;
    cert.witness_length = static_cast<int>(cert.factors.size());
    if (cert.witness_length != expected_len) {
        throw DomainError("witness factor count " + std::to_string(cert.witness_length) +
                          " does not match required " + std::to_string(expected_len));
    }

    cert.product = TensorElement::one(algebra, n);
    for (const auto& f : cert.factors) {
        if (!diagonal_kernel_check(f)) throw DomainError("witness factor escapes the kernel");
        cert.product = cert.product * f;
    }
    cert.product_nonzero = !cert.product.is_zero();
    cert.top_coefficient = cert.product.coefficient_at(Exponents(n, k));
    cert.routes_agree =
        field_normalize(Rat(cert.predicted_integer), algebra.field) == cert.top_coefficient &&
        cert.product.term_count() <= 1;
    return cert;
}

int exhaustive_zcl(int n, const TruncatedAlgebra& algebra, int max_len) {
    if (n < 2) throw DomainError("exhaustive search needs n >= 2");
    if (max_len < 1 || max_len > 8) throw ResourceError("max_len must be in 1..8");
    const int k = algebra.k;
    long space = 1;
    for (int i = 0; i < n; ++i) {
        space *= (k + 1);
        if (space > 125) throw ResourceError("(k+1)^n exceeds the 125 hard cap");
    }

    Search s;
    s.total_degree = n * k;
    s.max_len = max_len;
    s.cands.resize(s.total_degree + 1);

    for (int d = 1; d <= s.total_degree; ++d) {
        std::vector<Exponents> mons;
        Exponents cur(n, 0);
        gen_monomials(n, k, d, 0, cur, mons);
        const int m = static_cast<int>(mons.size());
        auto& pool = s.cands[d];
        if (d > k) {
            // Whole degree component is in the kernel; single monomials.
            for (const auto& mon : mons) {
                TensorElement e(algebra, n);
                e.set_term(mon, 1);
                if (!e.is_zero()) pool.push_back(e);
            }
        } else if (m <= 9) {
            // All sum-zero sign vectors over the monomial basis, up to sign.
            std::vector<int> c(m, -1);
            while (true) {
                int sum = 0, first_nonzero = 0;
                bool seen = false;
                for (int i = 0; i < m; ++i) {
                    sum += c[i];
                    if (!seen && c[i] != 0) {
                        first_nonzero = c[i];
                        seen = true;
                    }
                }
                if (seen && sum == 0 && first_nonzero == 1) {
                    TensorElement e(algebra, n);
                    for (int i = 0; i < m; ++i) {
                        if (c[i] != 0) e.set_term(mons[i], c[i]);
                    }
                    if (!e.is_zero()) pool.push_back(e);
                }
                int pos = m - 1;
                while (pos >= 0 && c[pos] == 1) c[pos--] = -1;
                if (pos < 0) break;
                ++c[pos];
            }
        } else {
            for (int i = 0; i < m; ++i) {
                for (int j = i + 1; j < m; ++j) {
                    TensorElement e(algebra, n);
                    e.set_term(mons[i], 1);
                    e.set_term(mons[j], -1);
                    if (!e.is_zero()) pool.push_back(e);
                }
            }
        }
    }

    s.dfs(TensorElement::one(algebra, n), 0, 0, 1, 0);
    return s.best;
}

}  // namespace tcalc
