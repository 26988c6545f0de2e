#pragma once

// End-to-end four-step analysis: contraction regions, enclosing-curve index,
// equilibrium classification, energy sublevel set, and BOA validation.

#include <optional>
#include <string>

#include "c2/io.hpp"

namespace c2 {

struct AnalysisConfig {
  VectorField field = preset_by_name("example1").field;
  std::string system_name = "example1";
  BBox bbox{-3, 3, -3, 3};
  int nx = 64, ny = 64;
  double r = 1.0;
  double eta = 0.0;
  double band = 1e-9;
  Vec2 curve_center = Vec2::Zero();
  double curve_radius = 4.0;
  int seeds_per_axis = 15;
  int n_samples = 100;
  std::uint64_t seed = 1;
  double dt = 1e-3;
  double t_max = 50.0;
  std::string out_dir;  // empty: no files written
};

enum class AnalysisVerdict { D0Found, NoOmega, InconclusiveIndex };

inline const char* to_string(AnalysisVerdict v) {
  switch (v) {
    case AnalysisVerdict::D0Found: return "d0_found";
    case AnalysisVerdict::NoOmega: return "no_omega";
    default: return "inconclusive_index";
  }
}

struct AnalysisReport {
  AnalysisVerdict verdict = AnalysisVerdict::D0Found;
  std::vector<EquilibriumPoint> equilibria;
  std::optional<IndexResult> total_index;
  RegionGrid grid;
  EnergyDecreaseReport energy_report;
  std::optional<BoaReport> boa;
  Json json;  // the serialized report, as written to report.json
};

/// Runs the full procedure and, when config.out_dir is set, writes
/// report.json, regions.csv, regions.svg, traj_<k>.csv and MANIFEST.json.
AnalysisReport run_analyze(const AnalysisConfig& config);

}  // namespace c2
