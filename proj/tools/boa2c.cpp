// boa2c: planar 2-contraction / Poincare-index analysis CLI.
//
// Subcommands: analyze, index, regions, simulate, equilibria.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "c2/analyze.hpp"

namespace {

struct CommonArgs {
  std::string system = "example1";
  std::vector<double> bbox;  // x0,x1,y0,y1
  std::vector<int> grid;     // nx,ny
  double r = -1.0;           // < 0: preset default
  double eta = 0.0;
  double band = 1e-9;
  double radius = -1.0;      // < 0: preset default
  std::vector<double> center{0.0, 0.0};
  int samples = 100;
  std::uint64_t seed = 1;
  double dt = 1e-3;
  double tmax = 50.0;
  std::string out = "out";
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--system", a.system, "preset name or system JSON file");
  cmd->add_option("--bbox", a.bbox, "bounding box x0,x1,y0,y1")->delimiter(',')->expected(4);
  cmd->add_option("--grid", a.grid, "grid cells NX,NY")->delimiter(',')->expected(2);
  cmd->add_option("--r", a.r, "energy level value r");
  cmd->add_option("--eta", a.eta, "contraction margin eta");
  cmd->add_option("--band", a.band, "Omega0 band half-width");
  cmd->add_option("--radius", a.radius, "enclosing curve radius");
  cmd->add_option("--center", a.center, "curve center x,y")->delimiter(',')->expected(2);
  cmd->add_option("--samples", a.samples, "number of BOA samples");
  cmd->add_option("--seed", a.seed, "PRNG seed");
  cmd->add_option("--dt", a.dt, "integration step");
  cmd->add_option("--tmax", a.tmax, "integration horizon");
  cmd->add_option("--out", a.out, "output directory");
}

c2::AnalysisConfig make_config(const CommonArgs& a) {
  c2::AnalysisConfig cfg;
  cfg.system_name = a.system;
  cfg.field = c2::load_system(a.system);
  if (c2::is_preset(a.system)) {
    const c2::Preset p = c2::preset_by_name(a.system);
    cfg.bbox = p.bbox;
    cfg.r = p.r;
    cfg.curve_radius = p.curve_radius;
  }
  if (a.bbox.size() == 4) cfg.bbox = {a.bbox[0], a.bbox[1], a.bbox[2], a.bbox[3]};
  if (a.grid.size() == 2) {
    cfg.nx = a.grid[0];
    cfg.ny = a.grid[1];
  }
  if (a.r >= 0.0) cfg.r = a.r;
  if (a.radius > 0.0) cfg.curve_radius = a.radius;
  cfg.curve_center = c2::Vec2(a.center[0], a.center[1]);
  cfg.eta = a.eta;
  cfg.band = a.band;
  cfg.n_samples = a.samples;
  cfg.seed = a.seed;
  cfg.dt = a.dt;
  cfg.t_max = a.tmax;
  cfg.out_dir = a.out;
  return cfg;
}

std::vector<c2::EquilibriumPoint> locate_and_classify(const c2::AnalysisConfig& cfg) {
  std::vector<c2::EquilibriumPoint> eqs;
  if (const c2::FamilyParams* fp = cfg.field.family_params()) {
    for (const c2::Vec2& loc : c2::family_equilibria(*fp)) {
      c2::EquilibriumPoint eq;
      eq.location = loc;
      eq.residual = cfg.field(loc).norm();
      eqs.push_back(eq);
    }
  } else {
    eqs = c2::find_equilibria(cfg.field, cfg.bbox, cfg.seeds_per_axis);
  }
  return c2::classify(std::move(eqs), cfg.field, [&](const c2::Vec2& x) {
    return c2::omega_label(cfg.field, x, cfg.eta, cfg.band);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar 2-contraction and Poincare-index analysis"};
  app.require_subcommand(1);

  CommonArgs args;
  bool table = false;

  CLI::App* analyze = app.add_subcommand("analyze", "run the full four-step procedure");
  CLI::App* index = app.add_subcommand("index", "winding number of a closed curve");
  CLI::App* regions = app.add_subcommand("regions", "rasterize Omega / U / D0");
  CLI::App* simulate = app.add_subcommand("simulate", "integrate trajectories seeded in D0");
  CLI::App* equilibria = app.add_subcommand("equilibria", "locate and classify equilibria");
  for (CLI::App* cmd : {analyze, index, regions, simulate, equilibria}) add_common(cmd, args);
  index->add_flag("--table", table, "emit the quadrant angle table CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    const c2::AnalysisConfig cfg = make_config(args);
    std::filesystem::create_directories(cfg.out_dir);

    if (analyze->parsed()) {
      const c2::AnalysisReport report = c2::run_analyze(cfg);
      std::cout << "verdict: " << c2::to_string(report.verdict) << "\n";
      std::cout << "total index: " << report.total_index->index << "\n";
      std::cout << "equilibria: " << report.equilibria.size() << "\n";
      if (report.boa)
        std::cout << "BOA pass rate: " << c2::format12(100.0 * report.boa->converged_fraction)
                  << "%\n";
      std::cout << "report: " << cfg.out_dir << "/report.json\n";
    } else if (index->parsed()) {
      const c2::IndexResult res = c2::winding_number(
          cfg.field, c2::ClosedCurve::circle(cfg.curve_center, cfg.curve_radius));
      std::cout << c2::index_result_to_json(res).dump(2) << "\n";
      if (table) {
        const auto rows = c2::appendix_a_table(cfg.field, cfg.curve_radius);
        c2::write_appendix_csv(cfg.out_dir + "/index_table.csv", rows);
        std::cout << "table: " << cfg.out_dir << "/index_table.csv\n";
      }
    } else if (regions->parsed()) {
      const c2::EnergySpec spec = c2::EnergySpec::for_field(cfg.field, cfg.r);
      const c2::RegionGrid grid = c2::build_region_grid(cfg.field, spec, cfg.bbox, cfg.nx,
                                                        cfg.ny, cfg.eta, cfg.band);
      c2::write_region_csv(cfg.out_dir + "/regions.csv", grid);
      c2::write_region_svg(cfg.out_dir + "/regions.svg", grid);
      const double total = static_cast<double>(grid.cells.size());
      std::cout << "Omega: " << c2::format12(100.0 * grid.count(c2::RegionLabel::Omega) / total)
                << "%  Omega1: "
                << c2::format12(100.0 * grid.count(c2::RegionLabel::Omega1) / total)
                << "%  D0: " << c2::format12(100.0 * grid.count_D0() / total) << "%\n";
      std::cout << "files: " << cfg.out_dir << "/regions.{csv,svg}\n";
    } else if (simulate->parsed()) {
      const c2::EnergySpec spec = c2::EnergySpec::for_field(cfg.field, cfg.r);
      const c2::RegionGrid grid = c2::build_region_grid(cfg.field, spec, cfg.bbox, cfg.nx,
                                                        cfg.ny, cfg.eta, cfg.band);
      std::vector<c2::Vec2> locations;
      for (const auto& eq : locate_and_classify(cfg)) locations.push_back(eq.location);
      const c2::BoaReport report = c2::boa_validate(cfg.field, grid, locations, cfg.n_samples,
                                                    cfg.seed, cfg.t_max, cfg.dt);
      c2::IntegrateOptions opts;
      opts.equilibria = locations;
      opts.store_stride = 100;
      for (int k = 0; k < static_cast<int>(report.samples.size()); ++k) {
        const c2::Trajectory traj =
            c2::integrate(cfg.field, report.samples[k].x0, cfg.dt, cfg.t_max, opts);
        c2::write_trajectory_csv(cfg.out_dir + "/traj_" + std::to_string(k) + ".csv", traj);
      }
      std::cout << c2::boa_report_to_json(report).dump(2) << "\n";
    } else if (equilibria->parsed()) {
      c2::Json out = c2::Json::array();
      for (const auto& eq : locate_and_classify(cfg)) out.push_back(c2::equilibrium_to_json(eq));
      std::cout << out.dump(2) << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
