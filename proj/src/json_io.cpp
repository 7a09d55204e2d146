#include "tcalc/json_io.hpp"

#include <sstream>

namespace tcalc {

std::string int_str(const Int& v) { return v.str(); }

std::string rat_str(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

Json element_to_json(const TensorElement& e) {
    Json terms = Json::array();
    for (const auto& [exps, c] : e.terms()) {
        terms.push_back(Json{{"exponents", exps}, {"coefficient", rat_str(c)}});
    }
    return Json{{"arity", e.arity()},
                {"k", e.algebra().k},
                {"characteristic", e.algebra().field.characteristic},
                {"terms", terms}};
}

Json certificate_to_json(const WitnessCertificate& c) {
    return Json{{"n", c.n},
                {"k", c.k},
                {"characteristic", c.field.characteristic},
                {"route", c.route},
                {"factors", c.factor_names},
                {"witness_length", c.witness_length},
                {"product", element_to_json(c.product)},
                {"product_nonzero", c.product_nonzero},
                {"top_coefficient", rat_str(c.top_coefficient)},
                {"predicted_integer", int_str(c.predicted_integer)},
                {"routes_agree", c.routes_agree}};
}

Json cohomology_to_json(const CohomologyData& d) {
    Json degrees = Json::array();
    for (const auto& deg : d.degrees) {
        Json torsion = Json::array();
        for (const auto& t : deg.torsion) torsion.push_back(Json::array({t.prime, t.exponent}));
        degrees.push_back(
            Json{{"i", deg.i}, {"free_rank", deg.free_rank}, {"torsion", torsion}});
    }
    Json po;
    const auto factors_json = [](const std::vector<std::pair<std::uint64_t, int>>& fs) {
        Json a = Json::array();
        for (const auto& [q, f] : fs) a.push_back(Json::array({q, f}));
        return a;
    };
    if (d.power_order.infinite) {
        po = Json{{"type", "infinite"}, {"q_factors", factors_json(d.power_order.q_factors)}};
    } else {
        po = Json{{"type", "finite"},
                  {"l", d.power_order.l},
                  {"l_q_factors", factors_json(d.power_order.l_q_factors)}};
    }
    return Json{{"r", d.r}, {"k", d.k}, {"degrees", degrees}, {"power_order", po}};
}

Json structure_to_json(const CellStructure& cs) {
    Json cells = Json::array();
    for (const auto& c : cs.cells) {
        Json jc{{"dimension", c.dimension}, {"role", c.role}};
        if (c.role == "relator") {
            jc["boundary_multiplicity"] = int_str(c.boundary_multiplicity);
            jc["boundary_partner"] = c.boundary_partner;
        }
        if (c.has_hopf) jc["hopf_invariant"] = int_str(c.hopf_invariant);
        cells.push_back(jc);
    }
    return Json{{"r", cs.r},
                {"k", cs.k},
                {"case", cs.case_tag},
                {"cells", cells},
                {"notes", cs.notes}};
}

Json report_to_json(const CohomologyReport& rep) {
    return Json{{"dims", rep.dims},
                {"profile_match", rep.profile_match},
                {"spine_product", int_str(rep.spine_product)},
                {"unit_check", rep.unit_check},
                {"notes", rep.notes}};
}

Json envelope(const std::string& command, Json inputs, Json result, Json provenance) {
    return Json{{"command", command},
                {"inputs", std::move(inputs)},
                {"result", std::move(result)},
                {"provenance", std::move(provenance)}};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

Json parse_or_throw(const std::string& bytes) {
    try {
        return Json::parse(bytes);
    } catch (const Json::parse_error& e) {
        throw DomainError(std::string("malformed JSON: ") + e.what());
    }
}

// Collects field-level problems; returns fallback when the shape is wrong.
struct FieldReader {
    const Json& j;
    std::vector<std::string>& bad;

    long integer(const std::string& key, long fallback) const {
        if (!j.contains(key)) {
            bad.push_back("missing field '" + key + "'");
            return fallback;
        }
        if (!j[key].is_number_integer()) {
            bad.push_back("field '" + key + "' must be an integer");
            return fallback;
        }
        return j[key].get<long>();
    }
};

std::vector<std::pair<std::uint64_t, int>> read_factor_pairs(const Json& j,
                                                             const std::string& key,
                                                             std::vector<std::string>& bad) {
    std::vector<std::pair<std::uint64_t, int>> out;
    if (!j.contains(key) || !j[key].is_array()) {
        bad.push_back("'" + key + "' must be an array of [prime, exponent] pairs");
        return out;
    }
    for (const auto& entry : j[key]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_unsigned() ||
            !entry[1].is_number_integer()) {
            bad.push_back("'" + key + "' entries must be [prime, exponent] pairs");
            continue;
        }
        out.emplace_back(entry[0].get<std::uint64_t>(), entry[1].get<int>());
    }
    return out;
}

}  // namespace

CohomologyData parse_cohomology_input(const std::string& bytes) {
    Json j = parse_or_throw(bytes);
    std::vector<std::string> bad;
    if (!j.is_object()) throw DomainError("cohomology input must be a JSON object");

    CohomologyData d;
    FieldReader top{j, bad};
    d.r = static_cast<int>(top.integer("r", 2));
    d.k = static_cast<int>(top.integer("k", 2));

    if (!j.contains("degrees") || !j["degrees"].is_array()) {
        bad.push_back("'degrees' must be an array");
    } else {
        for (const auto& deg : j["degrees"]) {
            if (!deg.is_object()) {
                bad.push_back("'degrees' entries must be objects");
                continue;
            }
            DegreeData dd;
            FieldReader r{deg, bad};
            dd.i = static_cast<int>(r.integer("i", 0));
            dd.free_rank = r.integer("free_rank", 0);
            if (deg.contains("torsion")) {
                for (const auto& [p, a] : read_factor_pairs(deg, "torsion", bad)) {
                    dd.torsion.push_back(TorsionPrimary{p, a});
                }
            }
            d.degrees.push_back(dd);
        }
    }

    if (!j.contains("power_order") || !j["power_order"].is_object()) {
        bad.push_back("'power_order' must be an object");
    } else {
        const Json& po = j["power_order"];
        std::string type = po.contains("type") && po["type"].is_string()
                               ? po["type"].get<std::string>()
                               : (bad.push_back("power_order 'type' must be a string"), "");
        if (type == "infinite") {
            d.power_order.infinite = true;
            d.power_order.q_factors = read_factor_pairs(po, "q_factors", bad);
        } else if (type == "finite") {
            d.power_order.infinite = false;
            FieldReader r{po, bad};
            d.power_order.l = static_cast<int>(r.integer("l", 0));
            d.power_order.l_q_factors = read_factor_pairs(po, "l_q_factors", bad);
        } else if (!type.empty()) {
            bad.push_back("power_order type must be 'infinite' or 'finite'");
        }
    }

    for (const auto& v : validate(d)) bad.push_back(v);
    if (!bad.empty()) {
        std::string msg = "invalid cohomology input:";
        for (const auto& b : bad) msg += "\n  - " + b;
        throw DomainError(msg);
    }
    return d;
}

CellStructure parse_cell_structure(const std::string& bytes) {
    Json j = parse_or_throw(bytes);
    std::vector<std::string> bad;
    if (!j.is_object()) throw DomainError("cell structure must be a JSON object");

    CellStructure cs;
    FieldReader top{j, bad};
    cs.r = static_cast<int>(top.integer("r", 2));
    cs.k = static_cast<int>(top.integer("k", 2));
    if (j.contains("case") && j["case"].is_string()) {
        cs.case_tag = j["case"].get<std::string>();
    } else {
        bad.push_back("missing 'case' tag");
    }
    if (j.contains("notes") && j["notes"].is_array()) {
        for (const auto& n : j["notes"]) {
            if (n.is_string()) cs.notes.push_back(n.get<std::string>());
        }
    }
    if (!j.contains("cells") || !j["cells"].is_array()) {
        bad.push_back("'cells' must be an array");
    } else {
        for (const auto& jc : j["cells"]) {
            Cell c;
            FieldReader r{jc, bad};
            c.dimension = static_cast<int>(r.integer("dimension", 0));
            if (jc.contains("role") && jc["role"].is_string()) {
                c.role = jc["role"].get<std::string>();
            } else {
                bad.push_back("cell missing 'role'");
            }
            if (jc.contains("boundary_multiplicity")) {
                const auto& m = jc["boundary_multiplicity"];
                if (m.is_string()) {
                    try {
                        c.boundary_multiplicity = Int(m.get<std::string>());
                    } catch (const std::exception&) {
                        bad.push_back("boundary_multiplicity is not an integer string");
                    }
                } else if (m.is_number_integer()) {
                    c.boundary_multiplicity = m.get<long>();
                } else {
                    bad.push_back("boundary_multiplicity must be an integer or decimal string");
                }
            }
            if (jc.contains("boundary_partner")) {
                FieldReader rp{jc, bad};
                c.boundary_partner = static_cast<int>(rp.integer("boundary_partner", -1));
            }
            if (jc.contains("hopf_invariant") && !jc["hopf_invariant"].is_null()) {
                const auto& h = jc["hopf_invariant"];
                c.has_hopf = true;
                if (h.is_string()) {
                    try {
                        c.hopf_invariant = Int(h.get<std::string>());
                    } catch (const std::exception&) {
                        bad.push_back("hopf_invariant is not an integer string");
                    }
                } else if (h.is_number_integer()) {
                    c.hopf_invariant = h.get<long>();
                } else {
                    bad.push_back("hopf_invariant must be an integer or decimal string");
                }
            }
            cs.cells.push_back(c);
        }
    }

    for (const auto& v : validate_structure(cs)) bad.push_back(v);
    if (!bad.empty()) {
        std::string msg = "invalid cell structure:";
        for (const auto& b : bad) msg += "\n  - " + b;
        throw DomainError(msg);
    }
    return cs;
}

}  // namespace tcalc
