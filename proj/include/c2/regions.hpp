#pragma once

// 2-contraction region Omega / Omega0 / Omega1 labeling, energy sublevel
// region U, and the common basin of attraction D0 = Omega intersect U.

#include <vector>

#include "c2/equilibria.hpp"
#include "c2/system.hpp"
#include "c2/types.hpp"

namespace c2 {

/// Energy function: the double-well form for the family,
/// E = x2^2/2 - b1 x1^2/2 + b3 x1^(2s+2)/(2s+2), or E = |x|^2/2 for the
/// network system; U = {E < r}.
struct EnergySpec {
  enum class Kind { Family, Network };
  Kind kind = Kind::Family;
  FamilyParams family;    // valid when kind == Family
  NetworkParams network;  // valid when kind == Network
  double r = 1.0;

  static EnergySpec for_field(const VectorField& field, double r);
};

double energy(const EnergySpec& spec, const Vec2& x);

/// dE/dt along the field: grad E . f. For family specs this equals the
/// closed form b2 x2^2 + b4 x1^(2m) x2^(2q+2); throws DomainError if the
/// spec and field parameters disagree.
double energy_rate(const EnergySpec& spec, const VectorField& field, const Vec2& x);

/// Trichotomy by t = trace J(x): |t| <= band -> Omega0; t < -eta -> Omega;
/// t > 0 -> Omega1. Defaults: eta = 0, band = 1e-9.
RegionLabel omega_label(const VectorField& field, const Vec2& x, double eta = 0.0,
                        double band = 1e-9);

struct RegionCell {
  RegionLabel label = RegionLabel::Unknown;
  bool in_U = false;
  bool in_D0 = false;
};

struct RegionGrid {
  BBox bbox;
  int nx = 0, ny = 0;
  std::vector<RegionCell> cells;  // row-major, j * nx + i

  const RegionCell& cell(int i, int j) const { return cells[j * nx + i]; }
  Vec2 cell_center(int i, int j) const {
    return Vec2(bbox.x0 + (i + 0.5) * bbox.width() / nx,
                bbox.y0 + (j + 0.5) * bbox.height() / ny);
  }
  int count(RegionLabel label) const;
  int count_U() const;
  int count_D0() const;
};

RegionGrid build_region_grid(const VectorField& field, const EnergySpec& spec,
                             const BBox& bbox, int nx, int ny, double eta = 0.0,
                             double band = 1e-9);

struct EnergyDecreaseReport {
  int d0_cells = 0;
  int d0_violations = 0;
  double pass_fraction = 1.0;
  std::vector<Vec2> violating_cells;
  int u_only_violations = 0;  // informational: U cells outside D0 with dE/dt > tol
  bool network_bound_checked = false;
  int network_bound_violations = 0;  // cells with |x| > C1/delta failing Theorem 2's bound
};

EnergyDecreaseReport validate_energy_decrease(const EnergySpec& spec, const VectorField& field,
                                              const RegionGrid& grid, double tol = 1e-12);

struct EquilibriaRegionReport {
  std::vector<EquilibriumPoint> eqs;  // with region fields populated
  std::vector<std::string> warnings;
};

EquilibriaRegionReport equilibria_region_report(const std::vector<EquilibriumPoint>& eqs,
                                                const VectorField& field, double eta = 0.0,
                                                double band = 1e-9);

}  // namespace c2
