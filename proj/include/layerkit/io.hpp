#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include <json.hpp>

#include "layerkit/adapt.hpp"
#include "layerkit/diagnostics.hpp"
#include "layerkit/harness.hpp"
#include "layerkit/mesh.hpp"
#include "layerkit/mesh_spec.hpp"

namespace layerkit {

/// Shortest representation that round-trips a double (17 significant digits).
std::string format_double(double v);

// Mesh serialization: {"family": ..., "params": {...}, "nodes": [...]}.
nlohmann::json mesh_to_json(const Mesh1D& mesh, const std::string& family,
                            const std::map<std::string, double>& params);
Mesh1D mesh_from_json(const nlohmann::json& j);
Mesh1D load_mesh(const std::string& path);

/// CSV with header "i,x,h"; the h column of row 0 is 0.
void write_mesh_csv(std::ostream& os, const Mesh1D& mesh);

nlohmann::json mesh_report_to_json(const MeshReport& report);
std::string mesh_report_csv(const MeshReport& report);

/// CSV with the fixed header "family,scheme,eps,N,error,constant,rate".
void write_report_csv(std::ostream& os, const ConvergenceReport& report);
nlohmann::json report_to_json(const ConvergenceReport& report);

nlohmann::json trace_to_json(const AdaptTrace& trace);
/// CSV with header "iter,Q,eta,err".
void write_trace_csv(std::ostream& os, const AdaptTrace& trace);

void write_dl_table_csv(std::ostream& os, const std::vector<DLRobustnessRow>& rows);

/// Study configuration from JSON (see README for the schema).
StudyConfig study_config_from_json(const nlohmann::json& j);

/// MeshSpec from "key=value,key=value" text (the CLI's inline mesh syntax).
MeshSpec mesh_spec_from_kv(const std::string& text);
std::map<std::string, double> mesh_spec_params(const MeshSpec& spec);

} // namespace layerkit
