#include "tcalc/char_sets.hpp"

#include <algorithm>
#include <set>

#include "tcalc/lambda_coeffs.hpp"

namespace tcalc {

std::vector<std::string> validate(const CohomologyData& data) {
    std::vector<std::string> bad;
    if (data.r < 2 || data.r % 2 != 0) bad.push_back("r must be a positive even integer");
    if (data.k < 2) bad.push_back("k must be at least 2");

    std::set<int> seen;
    for (const auto& d : data.degrees) {
        if (d.i < 1 || d.i > data.k) {
            bad.push_back("degree entry i=" + std::to_string(d.i) + " outside 1..k");
            continue;
        }
        if (!seen.insert(d.i).second) {
            bad.push_back("duplicate degree entry i=" + std::to_string(d.i));
        }
        if (d.free_rank < 0) {
            bad.push_back("degree i=" + std::to_string(d.i) + ": free_rank must be >= 0");
        }
        for (const auto& t : d.torsion) {
            if (!is_prime_u64(t.prime)) {
                bad.push_back("degree i=" + std::to_string(d.i) + ": torsion entry " +
                              std::to_string(t.prime) + " is not prime");
            }
            if (t.exponent < 1) {
                bad.push_back("degree i=" + std::to_string(d.i) +
                              ": torsion exponent must be >= 1");
            }
        }
    }
    for (int i = 1; i <= data.k && data.k >= 2; ++i) {
        if (!seen.count(i)) bad.push_back("missing degree entry i=" + std::to_string(i));
    }

    const auto degree_of = [&](int i) -> const DegreeData* {
        for (const auto& d : data.degrees) {
            if (d.i == i) return &d;
        }
        return nullptr;
    };
    if (const DegreeData* d1 = degree_of(1); d1 && d1->free_rank != 1) {
        bad.push_back("free rank at degree r must be 1");
    }

    const auto check_factors = [&](const std::vector<std::pair<std::uint64_t, int>>& fs,
                                   const std::string& which) {
        for (const auto& [q, f] : fs) {
            if (!is_prime_u64(q)) {
                bad.push_back(which + ": factor " + std::to_string(q) + " is not prime");
            }
            if (f < 1) bad.push_back(which + ": exponent must be >= 1");
        }
    };
    if (data.power_order.infinite) {
        check_factors(data.power_order.q_factors, "q_factors");
        if (const DegreeData* dk = degree_of(data.k); dk && dk->free_rank < 1) {
            bad.push_back("infinite order of u^k requires free rank >= 1 at degree kr");
        }
    } else {
        check_factors(data.power_order.l_q_factors, "l_q_factors");
        if (data.power_order.l < 2 || data.power_order.l > data.k - 1) {
            bad.push_back("l must satisfy 2 <= l <= k-1");
        }
        if (const DegreeData* dk = degree_of(data.k); dk && dk->torsion.empty()) {
            bad.push_back("finite order of u^k requires torsion at degree kr");
        }
    }
    return bad;
}

void require_valid(const CohomologyData& data) {
    auto bad = validate(data);
    if (bad.empty()) return;
    std::string msg = "invalid cohomology data:";
    for (const auto& b : bad) msg += "\n  - " + b;
    throw DomainError(msg);
}

const std::vector<TorsionPrimary>& torsion_at(const CohomologyData& data, int i) {
    static const std::vector<TorsionPrimary> empty;
    for (const auto& d : data.degrees) {
        if (d.i == i) return d.torsion;
    }
    return empty;
}

std::vector<std::uint64_t> q_set(const std::vector<std::pair<std::uint64_t, int>>& factors) {
    std::set<std::uint64_t> s;
    for (const auto& [q, f] : factors) {
        if (!is_prime_u64(q)) {
            throw DomainError("q_set: " + std::to_string(q) + " is not prime");
        }
        (void)f;
        s.insert(q);
    }
    return {s.begin(), s.end()};
}

std::vector<std::uint64_t> p_set(const std::vector<TorsionPrimary>& torsion) {
    std::set<std::uint64_t> s;
    for (const auto& t : torsion) s.insert(t.prime);
    return {s.begin(), s.end()};
}

bool CofinitePrimeSet::contains(std::uint64_t characteristic) const {
    if (characteristic == 0) return includes_zero;
    if (!is_prime_u64(characteristic)) return false;
    return !std::binary_search(excluded.begin(), excluded.end(), characteristic);
}

std::pair<std::string, CofinitePrimeSet> admissible_characteristics(const CohomologyData& data) {
    require_valid(data);
    CofinitePrimeSet out;
    if (data.power_order.infinite) {
        out.includes_zero = true;
        out.excluded = q_set(data.power_order.q_factors);
        return {"(i)", out};
    }
    out.includes_zero = false;
    std::set<std::uint64_t> ex;
    for (auto p : p_set(torsion_at(data, data.k))) ex.insert(p);
    for (auto q : q_set(data.power_order.l_q_factors)) ex.insert(q);
    out.excluded = {ex.begin(), ex.end()};
    return {"(ii)", out};
}

std::uint64_t select_prop1_characteristic(const CohomologyData& data) {
    auto [tag, set] = admissible_characteristics(data);
    if (set.includes_zero) return 0;

    Int relevant = (data.k % 2 == 0) ? lambda3(data.k) : Int(2 * lambda3(data.k - 1));
    if (relevant < 0) relevant = -relevant;
    for (std::uint64_t p = 2;; p = (p == 2 ? 3 : p + 2)) {
        if (!is_prime_u64(p)) continue;
        if (!set.contains(p)) continue;
        if (relevant % p == 0) continue;
        return p;
    }
}

}  // namespace tcalc
