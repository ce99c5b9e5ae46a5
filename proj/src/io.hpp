#pragma once

#include <json.hpp>

#include "lattice.hpp"

namespace cybe {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// Envelope: {"schema_version": "1", "kind": ..., "body": {...}}.
// Unknown fields are rejected everywhere; rationals travel as "p/q" strings;
// series carry explicit lo/prec windows.
struct Document {
    std::string kind;
    Json body;
};

Document parse_document(const std::string& text);
std::string emit_document(const Document& doc);

// payload converters
Json lie_to_json(const LieAlgebra& lie);
LiePtr lie_from_json(const Json& j);
Json series_to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const Json& j);
Json rmatrix_to_json(const RMatrix& r);
RMatrix rmatrix_from_json(const Json& j);
Json subalgebra_to_json(const Subalgebra& w);
Subalgebra subalgebra_from_json(const Json& j);
Json lattice_to_json(const MultiplierLattice& o);
MultiplierLattice lattice_from_json(const Json& j);
Json equivalence_to_json(const Equivalence& e);
Equivalence equivalence_from_json(const Json& j, const LieAlgebra& lie);

struct CommandResult {
    int exit_code = 0;  // 0 verified, 1 property fails, 2 undetermined, 3 input error
    Document report;
};

// The single dispatch point behind the C API and the CLI.  options may be
// empty; inputs are the parsed input documents in command order.
CommandResult run_command(const std::string& command, const Json& options,
                          const std::vector<Document>& inputs);

}  // namespace cybe
