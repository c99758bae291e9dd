#include "linred/report.hpp"

namespace linred {

nlohmann::json to_json(const ProvenanceStep& step) {
  nlohmann::json j;
  j["step"] = step.step;
  j["seed"] = step.seed;
  j["stream"] = step.stream;
  j["dims_before"] = {step.rows_before, step.cols_before};
  j["dims_after"] = {step.rows_after, step.cols_after};
  j["nnz_before"] = step.nnz_before;
  j["nnz_after"] = step.nnz_after;
  j["params"] = step.params;
  return j;
}

nlohmann::json to_json(const oracle::OracleVerdict& verdict) {
  nlohmann::json j;
  j["quantity"] = verdict.quantity;
  j["value"] = verdict.value;
  j["method"] = verdict.method;
  return j;
}

nlohmann::json instance_record(const GapInstance& gi,
                               const std::string& matrix_path,
                               const std::string& rhs_path) {
  nlohmann::json j;
  j["matrix_file"] = matrix_path;
  j["rhs_file"] = rhs_path;
  j["rows"] = gi.system.a.rows();
  j["cols"] = gi.system.a.cols();
  j["nnz"] = gi.system.a.nnz();
  j["epsilon"] = gi.epsilon;
  j["promised"] = promised_case_name(gi.promised);
  nlohmann::json prov = nlohmann::json::array();
  for (const ProvenanceStep& s : gi.provenance) prov.push_back(to_json(s));
  j["provenance"] = std::move(prov);
  return j;
}

void strip_timing(nlohmann::json& j) {
  if (j.is_object()) {
    j.erase("wall_ms");
    for (auto& [key, value] : j.items()) strip_timing(value);
  } else if (j.is_array()) {
    for (auto& value : j) strip_timing(value);
  }
}

}  // namespace linred
