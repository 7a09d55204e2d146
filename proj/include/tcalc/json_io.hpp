#pragma once

#include <string>

#include <json.hpp>

#include "tcalc/algebra.hpp"
#include "tcalc/char_sets.hpp"
#include "tcalc/cw.hpp"
#include "tcalc/zcl.hpp"

namespace tcalc {

using Json = nlohmann::json;  // alphabetically sorted keys: deterministic

// Big integers render as decimal strings; exact rationals as "a/b".
std::string int_str(const Int& v);
std::string rat_str(const Rat& v);

Json element_to_json(const TensorElement& e);
Json certificate_to_json(const WitnessCertificate& c);
Json cohomology_to_json(const CohomologyData& d);
Json structure_to_json(const CellStructure& cs);
Json report_to_json(const CohomologyReport& rep);

// Standard report wrapper around every CLI payload.
Json envelope(const std::string& command, Json inputs, Json result, Json provenance);

// Canonical serialization: 2-space indent, sorted keys, trailing newline.
std::string dump_json(const Json& j);

// Parse + validate; throws DomainError listing every schema and invariant
// violation at once.
CohomologyData parse_cohomology_input(const std::string& bytes);
CellStructure parse_cell_structure(const std::string& bytes);

}  // namespace tcalc
