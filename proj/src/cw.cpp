#include "tcalc/cw.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tcalc/lambda_coeffs.hpp"

namespace tcalc {

namespace {

bool special_r(int r) { return r == 2 || r == 4 || r == 8; }

std::set<std::uint64_t> support_of(const Int& v, std::uint64_t limit) {
    auto primes = prime_support(v, limit);
    return {primes.begin(), primes.end()};
}

// Scales the minimal invariants so the spine product matches the declared
// factorization exactly when divisibility permits, else in support only.
// All scaling lands on the top invariant, the least constrained one.
std::vector<Int> match_hopf_product(int r, int k,
                                    const std::vector<std::pair<std::uint64_t, int>>& q_factors,
                                    std::vector<std::string>& notes) {
    HopfData h = min_hopf_invariants(r, k);
    Int target = 1;
    for (const auto& [q, f] : q_factors) {
        for (int i = 0; i < f; ++i) target *= q;
    }
    Int minimal = spine_power_relation(h);

    if (target % minimal == 0) {
        h.invariants.back() *= target / minimal;
        notes.push_back("hopf product matches the declared factorization exactly");
    } else {
        std::set<std::uint64_t> want;
        std::uint64_t largest = 2;
        for (const auto& [q, f] : q_factors) {
            want.insert(q);
            largest = std::max(largest, q);
        }
        const std::uint64_t limit = std::max<std::uint64_t>(3 * k, largest) + 1;
        for (auto q : want) {
            if (!support_of(spine_power_relation(h), limit).count(q)) {
                h.invariants.back() *= q;
            }
        }
        if (support_of(spine_power_relation(h), limit) != want) {
            throw DomainError(
                "declared q-set unreachable: minimal Hopf invariants force primes outside it");
        }
        notes.push_back(
            "hopf product matches the declared q-set in support only; exact exponents "
            "unreachable from the minimal invariants");
    }
    if (!in_hopf_image(r, k, h.invariants.back())) {
        throw DomainError("scaled top invariant escapes the achievable image");
    }
    return h.invariants;
}

void append_spine(CellStructure& cs, int top_i, const std::vector<Int>& invariants) {
    cs.cells.push_back(Cell{0, "generator", 0, -1, false, 0});
    for (int i = 1; i <= top_i; ++i) {
        Cell c{i * cs.r, "generator", 0, -1, false, 0};
        if (i >= 2) {
            c.has_hopf = true;
            c.hopf_invariant = invariants[i - 2];
        }
        cs.cells.push_back(c);
    }
}

long matrix_rank(std::vector<std::vector<Rat>> m, const FieldSpec& field) {
    if (m.empty() || m[0].empty()) return 0;
    const long rows = static_cast<long>(m.size());
    const long cols = static_cast<long>(m[0].size());
    long rank = 0;
    for (long c = 0; c < cols && rank < rows; ++c) {
        long pivot = -1;
        for (long rr = rank; rr < rows; ++rr) {
            if (m[rr][c] != 0) {
                pivot = rr;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        Rat inv = field_normalize(Rat(1) / m[rank][c], field);
        for (long cc = c; cc < cols; ++cc) {
            m[rank][cc] = field_normalize(m[rank][cc] * inv, field);
        }
        for (long rr = 0; rr < rows; ++rr) {
            if (rr == rank || m[rr][c] == 0) continue;
            Rat f = m[rr][c];
            for (long cc = c; cc < cols; ++cc) {
                m[rr][cc] = field_normalize(m[rr][cc] - f * m[rank][cc], field);
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

bool in_hopf_image(int r, int i, const Int& m) {
    if (r < 2 || r % 2 != 0) throw DomainError("generator degree r must be even and >= 2");
    if (i < 2) throw DomainError("hopf invariants start at i = 2");
    if (i == 2 && special_r(r)) return true;
    if (r == 2 && is_prime_u64(static_cast<std::uint64_t>(i))) return true;
    return m % i == 0;
}

HopfData min_hopf_invariants(int r, int k) {
    if (r < 2 || r % 2 != 0) throw DomainError("generator degree r must be even and >= 2");
    if (k < 2) throw DomainError("k must be at least 2");
    HopfData h;
    h.r = r;
    h.k = k;
    for (int i = 2; i <= k; ++i) {
        Int m;
        if (i == 2) {
            m = special_r(r) ? 1 : 2;
        } else {
            m = (r == 2 && is_prime_u64(static_cast<std::uint64_t>(i))) ? Int(1) : Int(i);
        }
        if (!in_hopf_image(r, i, m)) throw DomainError("minimal invariant escapes the image");
        h.invariants.push_back(m);
    }
    return h;
}

Int spine_power_relation(const HopfData& h) {
    Int p = 1;
    for (const auto& m : h.invariants) p *= m;
    return p;
}

std::vector<std::uint64_t> excluded_characteristics(int r, int k) {
    Int product = spine_power_relation(min_hopf_invariants(r, k));
    Int relevant = (k % 2 == 0) ? lambda3(k) : Int(2 * lambda3(k - 1));
    if (relevant < 0) relevant = -relevant;
    const std::uint64_t limit = static_cast<std::uint64_t>(3 * k) + 2;
    std::set<std::uint64_t> s = support_of(product, limit);
    for (auto p : support_of(relevant, limit)) s.insert(p);
    return {s.begin(), s.end()};
}

CellStructure synthesize_cell_structure(const CohomologyData& data,
                                        const std::string& relator_placement, int alpha_boost) {
    require_valid(data);
    if (relator_placement != "high" && relator_placement != "low") {
        throw DomainError("relator placement must be 'high' or 'low'");
    }
    if (alpha_boost < 0) throw DomainError("alpha boost must be >= 0");

    CellStructure cs;
    cs.r = data.r;
    cs.k = data.k;

    if (data.power_order.infinite) {
        cs.case_tag = "(a)";
        auto invariants = match_hopf_product(data.r, data.k, data.power_order.q_factors, cs.notes);
        append_spine(cs, data.k, invariants);
        return cs;
    }

    cs.case_tag = "(b)";
    const int l = data.power_order.l;
    auto invariants = match_hopf_product(data.r, l, data.power_order.l_q_factors, cs.notes);
    append_spine(cs, l, invariants);

    // One primary per distinct torsion prime at degree kr; largest exponent
    // wins when several primaries share a prime.
    std::map<std::uint64_t, int> primaries;
    for (const auto& t : torsion_at(data, data.k)) {
        auto [it, inserted] = primaries.try_emplace(t.prime, t.exponent);
        if (!inserted) it->second = std::max(it->second, t.exponent);
    }

    const auto power = [](std::uint64_t p, int e) {
        Int v = 1;
        for (int i = 0; i < e; ++i) v *= p;
        return v;
    };
    for (const auto& [p, alpha] : primaries) {
        for (int j = l + 1; j <= data.k - 1; ++j) {
            const int gdim = (relator_placement == "high") ? j * data.r - 1 : j * data.r;
            cs.cells.push_back(Cell{gdim, "generator", 0, -1, false, 0});
            const int gidx = static_cast<int>(cs.cells.size()) - 1;
            cs.cells.push_back(
                Cell{gdim + 1, "relator", power(p, alpha + alpha_boost), gidx, false, 0});
        }
        cs.cells.push_back(Cell{data.k * data.r - 1, "generator", 0, -1, false, 0});
        const int gidx = static_cast<int>(cs.cells.size()) - 1;
        cs.cells.push_back(
            Cell{data.k * data.r, "relator", power(p, alpha), gidx, false, 0});
    }
    cs.notes.push_back("relator placement: middle pairs sit at jr-1 ('high') or jr ('low'); "
                       "this structure uses '" + relator_placement + "'");
    cs.notes.push_back("per torsion prime: k-l-1 middle pairs plus one top pair at kr-1; "
                       "the alternative k-l middle-cell count is not applied");
    return cs;
}

std::vector<std::string> validate_structure(const CellStructure& cs) {
    std::vector<std::string> bad;
    if (cs.r < 2 || cs.r % 2 != 0) bad.push_back("r must be a positive even integer");
    if (cs.k < 2) bad.push_back("k must be at least 2");
    if (cs.case_tag != "(a)" && cs.case_tag != "(b)") {
        bad.push_back("case tag must be '(a)' or '(b)'");
    }
    if (cs.cells.empty()) {
        bad.push_back("cell list is empty");
        return bad;
    }
    const int n = static_cast<int>(cs.cells.size());
    int dim0 = 0, dimr = 0, top = 0;
    for (int idx = 0; idx < n; ++idx) {
        const Cell& c = cs.cells[idx];
        top = std::max(top, c.dimension);
        if (c.dimension < 0) bad.push_back("negative cell dimension");
        const int rem = c.dimension % cs.r;
        if (rem != 0 && rem != 1 && rem != cs.r - 1) {
            bad.push_back("cell dimension " + std::to_string(c.dimension) +
                          " is not a multiple of r or one off from it");
        }
        if (c.dimension == 0) ++dim0;
        if (c.dimension == cs.r) ++dimr;
        if (c.role == "relator") {
            Int mult = c.boundary_multiplicity;
            if (mult < 0) mult = -mult;
            if (mult < 2) bad.push_back("relator multiplicity must be >= 2 in absolute value");
            if (c.boundary_partner < 0 || c.boundary_partner >= n) {
                bad.push_back("relator partner index out of range");
            } else {
                const Cell& g = cs.cells[c.boundary_partner];
                if (g.dimension != c.dimension - 1) {
                    bad.push_back("relator partner must sit one dimension below");
                }
                if (g.role != "generator") bad.push_back("relator partner must be a generator");
            }
        } else if (c.role != "generator") {
            bad.push_back("cell role must be 'generator' or 'relator'");
        }
    }
    if (dim0 != 1) bad.push_back("exactly one cell of dimension 0 required");
    if (dimr != 1) bad.push_back("exactly one cell of dimension r required");
    if (top != cs.k * cs.r) bad.push_back("top dimension must be k*r");
    return bad;
}

CohomologyReport cellular_cohomology(const CellStructure& cs, const FieldSpec& field) {
    {
        auto bad = validate_structure(cs);
        if (!bad.empty()) {
            std::string msg = "invalid cell structure:";
            for (const auto& b : bad) msg += "\n  - " + b;
            throw DomainError(msg);
        }
    }
    make_field(field.characteristic);

    const int top = cs.k * cs.r;
    std::vector<std::vector<int>> by_dim(top + 1);
    for (int idx = 0; idx < static_cast<int>(cs.cells.size()); ++idx) {
        by_dim[cs.cells[idx].dimension].push_back(idx);
    }

    // rank of the coboundary C^d -> C^{d+1}; entries dual to the stored
    // boundary multiplicities.
    std::vector<long> rank(top + 1, 0);
    for (int d = 0; d < top; ++d) {
        const auto& lower = by_dim[d];
        const auto& upper = by_dim[d + 1];
        if (lower.empty() || upper.empty()) continue;
        std::vector<std::vector<Rat>> m(lower.size(), std::vector<Rat>(upper.size(), Rat(0)));
        for (std::size_t uc = 0; uc < upper.size(); ++uc) {
            const Cell& c = cs.cells[upper[uc]];
            if (c.role != "relator") continue;
            auto it = std::find(lower.begin(), lower.end(), c.boundary_partner);
            if (it == lower.end()) continue;
            m[it - lower.begin()][uc] =
                field_normalize(Rat(c.boundary_multiplicity), field);
        }
        rank[d] = matrix_rank(std::move(m), field);
    }

    CohomologyReport rep;
    rep.dims.resize(top + 1, 0);
    for (int d = 0; d <= top; ++d) {
        long dim = static_cast<long>(by_dim[d].size()) - rank[d] - (d > 0 ? rank[d - 1] : 0);
        rep.dims[d] = dim;
    }

    rep.profile_match = true;
    for (int d = 0; d <= top; ++d) {
        const long expected = (d % cs.r == 0 && d / cs.r <= cs.k) ? 1 : 0;
        if (rep.dims[d] != expected) rep.profile_match = false;
    }

    rep.spine_product = 1;
    for (const auto& c : cs.cells) {
        if (c.has_hopf) rep.spine_product *= c.hopf_invariant;
    }
    if (field.characteristic == 0) {
        rep.unit_check = rep.spine_product != 0;
    } else {
        rep.unit_check = rep.spine_product % field.characteristic != 0;
    }
    rep.notes = cs.notes;
    return rep;
}

}  // namespace tcalc
