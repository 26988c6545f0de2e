#include "c2/analyze.hpp"

#include <filesystem>

namespace c2 {

namespace {

Json region_summary_json(const RegionGrid& grid) {
  const double total = static_cast<double>(grid.cells.size());
  Json j;
  j["nx"] = grid.nx;
  j["ny"] = grid.ny;
  j["bbox"] = {round12(grid.bbox.x0), round12(grid.bbox.x1), round12(grid.bbox.y0),
               round12(grid.bbox.y1)};
  j["omega_fraction"] = round12(grid.count(RegionLabel::Omega) / total);
  j["omega0_fraction"] = round12(grid.count(RegionLabel::Omega0) / total);
  j["omega1_fraction"] = round12(grid.count(RegionLabel::Omega1) / total);
  j["u_fraction"] = round12(grid.count_U() / total);
  j["d0_fraction"] = round12(grid.count_D0() / total);
  return j;
}

}  // namespace

AnalysisReport run_analyze(const AnalysisConfig& config) {
  namespace fs = std::filesystem;
  AnalysisReport report;
  std::vector<std::string> outputs;
  std::string failure_stage;

  const bool write_files = !config.out_dir.empty();
  if (write_files) fs::create_directories(config.out_dir);
  auto out_path = [&](const std::string& name) { return config.out_dir + "/" + name; };

  try {
    // locate equilibria
    std::vector<EquilibriumPoint> eqs;
    if (const FamilyParams* fp = config.field.family_params()) {
      for (const Vec2& loc : family_equilibria(*fp)) {
        EquilibriumPoint eq;
        eq.location = loc;
        eq.residual = config.field(loc).norm();
        eqs.push_back(eq);
      }
    } else {
      eqs = find_equilibria(config.field, config.bbox, config.seeds_per_axis);
    }

    // step 1: 2-contraction region grid
    failure_stage = "regions";
    const EnergySpec spec = EnergySpec::for_field(config.field, config.r);
    report.grid = build_region_grid(config.field, spec, config.bbox, config.nx, config.ny,
                                    config.eta, config.band);
    const bool no_omega = report.grid.count(RegionLabel::Omega) == 0;

    // step 2: index of the enclosing curve
    failure_stage = "index";
    report.total_index = winding_number(
        config.field, ClosedCurve::circle(config.curve_center, config.curve_radius));

    auto region_of = [&](const Vec2& x) {
      return omega_label(config.field, x, config.eta, config.band);
    };
    failure_stage = "classify";
    report.equilibria = classify(std::move(eqs), config.field, region_of);
    if (report.total_index->index != +1) {
      // outside the I_C = +1 setting the region argument gives no verdicts
      for (auto& eq : report.equilibria)
        if (eq.nature == Nature::Stable || eq.nature == Nature::Unstable)
          eq.nature = Nature::Unknown;
    }

    // steps 3 and 4: energy decrease on D0, then seeded BOA validation
    failure_stage = "energy";
    report.energy_report = validate_energy_decrease(spec, config.field, report.grid);

    if (no_omega) {
      report.verdict = AnalysisVerdict::NoOmega;
    } else if (report.total_index->index != +1) {
      report.verdict = AnalysisVerdict::InconclusiveIndex;
    } else {
      report.verdict = AnalysisVerdict::D0Found;
      failure_stage = "boa";
      std::vector<Vec2> locations;
      for (const auto& eq : report.equilibria) locations.push_back(eq.location);
      if (report.grid.count_D0() > 0) {
        report.boa = boa_validate(config.field, report.grid, locations, config.n_samples,
                                  config.seed, config.t_max, config.dt);
        if (write_files) {
          IntegrateOptions opts;
          opts.equilibria = locations;
          opts.store_stride = 100;
          const int n_traj = std::min(10, static_cast<int>(report.boa->samples.size()));
          for (int k = 0; k < n_traj; ++k) {
            const Trajectory traj = integrate(config.field, report.boa->samples[k].x0,
                                              config.dt, config.t_max, opts);
            const std::string name = "traj_" + std::to_string(k) + ".csv";
            write_trajectory_csv(out_path(name), traj);
            outputs.push_back(name);
          }
        }
      }
    }

    failure_stage = "report";
    Json j;
    j["system"] = config.system_name;
    j["definition"] = field_to_json(config.field);
    j["verdict"] = to_string(report.verdict);
    Json eq_json = Json::array();
    for (const auto& eq : report.equilibria) eq_json.push_back(equilibrium_to_json(eq));
    j["equilibria"] = eq_json;
    j["total_index"] = index_result_to_json(*report.total_index);
    j["region_summary"] = region_summary_json(report.grid);
    j["energy"] = {{"r", round12(config.r)},
                   {"d0_cells", report.energy_report.d0_cells},
                   {"d0_pass_fraction", round12(report.energy_report.pass_fraction)},
                   {"u_only_violations", report.energy_report.u_only_violations}};
    if (report.boa) j["boa"] = boa_report_to_json(*report.boa);
    report.json = j;
    failure_stage.clear();

    if (write_files) {
      write_text_file(out_path("report.json"), j.dump(2) + "\n");
      outputs.push_back("report.json");
      write_region_csv(out_path("regions.csv"), report.grid);
      outputs.push_back("regions.csv");
      write_region_svg(out_path("regions.svg"), report.grid);
      outputs.push_back("regions.svg");
    }
  } catch (...) {
    if (write_files) {
      Json manifest;
      manifest["outputs"] = outputs;
      manifest["status"] = "failed";
      manifest["failure_stage"] = failure_stage;
      write_text_file(out_path("MANIFEST.json"), manifest.dump(2) + "\n");
    }
    throw;
  }

  if (write_files) {
    Json manifest;
    manifest["outputs"] = outputs;
    manifest["status"] = "ok";
    write_text_file(out_path("MANIFEST.json"), manifest.dump(2) + "\n");
  }
  return report;
}

}  // namespace c2
