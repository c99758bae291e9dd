#pragma once

#include <json.hpp>

#include "linred/oracle.hpp"
#include "linred/reduce.hpp"

// JSON shapes for provenance records and run reports. Keys are emitted in
// sorted order, so identical runs serialize byte-identically; wall-clock
// measurements all live under keys that strip_timing removes.

namespace linred {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const ProvenanceStep& step);
nlohmann::json to_json(const oracle::OracleVerdict& verdict);

// Metadata of an instance (dims, nnz, epsilon, promise, provenance); the
// matrix itself lives in its Matrix Market file.
nlohmann::json instance_record(const GapInstance& gi,
                               const std::string& matrix_path,
                               const std::string& rhs_path);

// Removes every timing field ("wall_ms" keys) recursively; reports are
// comparable across runs after this.
void strip_timing(nlohmann::json& j);

}  // namespace linred
