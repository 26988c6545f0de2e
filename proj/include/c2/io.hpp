#pragma once

// JSON/CSV serialization, the system-definition schema, and the built-in
// presets reproducing the benchmark examples.

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "c2/equilibria.hpp"
#include "c2/odesim.hpp"
#include "c2/poincare.hpp"
#include "c2/regions.hpp"
#include "c2/system.hpp"

namespace c2 {

using Json = nlohmann::ordered_json;

/// Round to 12 significant digits, the formatting used for all float output.
double round12(double v);
std::string format12(double v);

Json matrix_to_json(const MatX& m);
MatX matrix_from_json(const Json& j);

/// Parse {"kind": "family"|"network"|"polynomial", "params": {...}}.
VectorField field_from_json(const Json& j);
Json field_to_json(const VectorField& field);

Json equilibrium_to_json(const EquilibriumPoint& eq);
Json index_result_to_json(const IndexResult& r);
Json boa_report_to_json(const BoaReport& r);

const char* to_string(Nature n);
const char* to_string(Verdict v);

struct Preset {
  std::string name;
  VectorField field;
  BBox bbox;
  double r;              // default energy level value
  double curve_radius;   // default enclosing-curve radius
};

/// Built-in presets: example1, example2, example3, opinion, intro.
Preset preset_by_name(const std::string& name);
std::vector<std::string> preset_names();
bool is_preset(const std::string& name);

/// Load a field from a preset name or a JSON file path.
VectorField load_system(const std::string& name_or_path);

void write_region_csv(const std::string& path, const RegionGrid& grid);
void write_region_svg(const std::string& path, const RegionGrid& grid);
void write_trajectory_csv(const std::string& path, const Trajectory& traj);
void write_appendix_csv(const std::string& path, const std::vector<AppendixRow>& rows);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace c2
