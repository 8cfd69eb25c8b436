// JSON and text forms of reports and operator bundles.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qalg/certify.hpp"
#include "qalg/embedding.hpp"
#include "qalg/generators.hpp"

namespace qalg {

using Json = nlohmann::ordered_json;

class FormatError : public Error {
 public:
  using Error::Error;
};

/// {domain, codomain, entries: [[row, col, "scalar"], ...]} in row-major order.
Json operator_to_json(const Operator& op);
Operator operator_from_json(const Json& j);

Json space_to_json(const Space& space);
Space space_from_json(const Json& j);

/// {"kind": "generators", n, level, D, operators: {"Y+(1,2)": {...}, ...}}.
Json bundle_to_json(const GeneratorSet& gens);
/// {"kind": "embedding", route, k1, k2, level, D, operators: {"X+1": {...}, ...}}.
Json bundle_to_json(const EmbeddedSet& set);

Json report_to_json(const RelationReport& report, bool timing = true);
RelationReport report_from_json(const Json& j);

/// One line per relation, witnesses for anything that did not pass.
std::string render_text(const RelationReport& report);

/// Family x configuration status table over several reports, with an overall line.
std::string merged_summary(const std::vector<RelationReport>& reports);

}  // namespace qalg
