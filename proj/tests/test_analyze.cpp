#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "c2/analyze.hpp"

using namespace c2;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AnalysisConfig preset_config(const std::string& name) {
  const Preset p = preset_by_name(name);
  AnalysisConfig cfg;
  cfg.field = p.field;
  cfg.system_name = name;
  cfg.bbox = p.bbox;
  cfg.r = p.r;
  cfg.curve_radius = p.curve_radius;
  return cfg;
}

}  // namespace

TEST_CASE("analyze example1: D0 found, full BOA pass") {
  AnalysisConfig cfg = preset_config("example1");
  cfg.r = 2.0;
  cfg.n_samples = 50;
  const AnalysisReport report = run_analyze(cfg);
  CHECK(report.verdict == AnalysisVerdict::D0Found);
  CHECK(report.total_index->index == +1);
  REQUIRE(report.boa.has_value());
  CHECK(report.boa->converged_fraction == 1.0);
  CHECK(report.equilibria.size() == 3);
  CHECK(report.json["verdict"] == "d0_found");
}

TEST_CASE("analyze example3: no Omega region, no D0") {
  const AnalysisReport report = run_analyze(preset_config("example3"));
  CHECK(report.verdict == AnalysisVerdict::NoOmega);
  CHECK(report.grid.count(RegionLabel::Omega) == 0);
  CHECK_FALSE(report.boa.has_value());
  CHECK(report.json["region_summary"]["d0_fraction"] == 0.0);
}

TEST_CASE("analyze opinion: three equilibria, index +1") {
  AnalysisConfig cfg = preset_config("opinion");
  cfg.n_samples = 20;
  const AnalysisReport report = run_analyze(cfg);
  CHECK(report.verdict == AnalysisVerdict::D0Found);
  CHECK(report.equilibria.size() == 3);
  CHECK(report.total_index->index == +1);
  REQUIRE(report.boa.has_value());
  CHECK(report.boa->converged_fraction == 1.0);
}

TEST_CASE("analyze intro preset reuses the example2 field") {
  const AnalysisReport a = run_analyze(preset_config("intro"));
  const AnalysisReport b = run_analyze(preset_config("example2"));
  CHECK(a.verdict == b.verdict);
  CHECK(a.json["definition"] == b.json["definition"]);
}

TEST_CASE("two runs produce byte-identical outputs") {
  const fs::path dir1 = fs::temp_directory_path() / "c2_det_1";
  const fs::path dir2 = fs::temp_directory_path() / "c2_det_2";
  fs::remove_all(dir1);
  fs::remove_all(dir2);
  for (const auto& name : {"example1", "example3"}) {
    AnalysisConfig cfg = preset_config(name);
    cfg.n_samples = 10;
    cfg.nx = cfg.ny = 32;
    cfg.out_dir = dir1.string();
    run_analyze(cfg);
    cfg.out_dir = dir2.string();
    run_analyze(cfg);
    CHECK(slurp(dir1 / "report.json") == slurp(dir2 / "report.json"));
    CHECK(slurp(dir1 / "regions.csv") == slurp(dir2 / "regions.csv"));
    CHECK(slurp(dir1 / "MANIFEST.json") == slurp(dir2 / "MANIFEST.json"));
  }
  fs::remove_all(dir1);
  fs::remove_all(dir2);
}

TEST_CASE("analyze writes the declared output files") {
  const fs::path dir = fs::temp_directory_path() / "c2_files";
  fs::remove_all(dir);
  AnalysisConfig cfg = preset_config("example2");
  cfg.n_samples = 5;
  cfg.nx = cfg.ny = 32;
  cfg.out_dir = dir.string();
  run_analyze(cfg);
  for (const auto& name : {"report.json", "regions.csv", "regions.svg", "MANIFEST.json",
                           "traj_0.csv", "traj_4.csv"})
    CHECK(fs::exists(dir / name));
  const std::string manifest = slurp(dir / "MANIFEST.json");
  CHECK(manifest.find("\"status\": \"ok\"") != std::string::npos);
  fs::remove_all(dir);
}
