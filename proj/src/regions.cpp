#include "c2/regions.hpp"

#include <cmath>

namespace c2 {

EnergySpec EnergySpec::for_field(const VectorField& field, double r) {
  EnergySpec spec;
  spec.r = r;
  if (const FamilyParams* fp = field.family_params()) {
    spec.kind = Kind::Family;
    spec.family = *fp;
  } else if (const NetworkParams* np = field.network_params()) {
    spec.kind = Kind::Network;
    spec.network = *np;
  } else {
    throw DomainError("EnergySpec: no built-in energy function for a raw polynomial field");
  }
  return spec;
}

double energy(const EnergySpec& spec, const Vec2& x) {
  if (spec.kind == EnergySpec::Kind::Network) return 0.5 * x.squaredNorm();
  const FamilyParams& p = spec.family;
  return 0.5 * x.y() * x.y() - 0.5 * p.b1 * x.x() * x.x() +
         p.b3 / (2.0 * p.s + 2.0) * ipow(x.x(), 2 * p.s + 2);
}

namespace {

Vec2 energy_gradient(const EnergySpec& spec, const Vec2& x) {
  if (spec.kind == EnergySpec::Kind::Network) return x;
  const FamilyParams& p = spec.family;
  return Vec2(-p.b1 * x.x() + p.b3 * ipow(x.x(), 2 * p.s + 1), x.y());
}

void check_spec_matches(const EnergySpec& spec, const VectorField& field) {
  if (spec.kind == EnergySpec::Kind::Family) {
    const FamilyParams* fp = field.family_params();
    if (!fp) return;  // rate is still well defined as grad E . f
    const FamilyParams& p = spec.family;
    if (p.b1 != fp->b1 || p.b3 != fp->b3 || p.s != fp->s)
      throw DomainError("energy_rate: spec and field parameters disagree");
  }
}

}  // namespace

double energy_rate(const EnergySpec& spec, const VectorField& field, const Vec2& x) {
  check_spec_matches(spec, field);
  return energy_gradient(spec, x).dot(field(x));
}

RegionLabel omega_label(const VectorField& field, const Vec2& x, double eta, double band) {
  const double t = field.trace_j2(x);
  if (std::abs(t) <= band) return RegionLabel::Omega0;
  if (t < -eta) return RegionLabel::Omega;
  if (t > 0.0) return RegionLabel::Omega1;
  return RegionLabel::Omega0;  // in (-eta, -band): below the margin, treat as boundary
}

int RegionGrid::count(RegionLabel label) const {
  int n = 0;
  for (const auto& c : cells) n += (c.label == label);
  return n;
}

int RegionGrid::count_U() const {
  int n = 0;
  for (const auto& c : cells) n += c.in_U;
  return n;
}

int RegionGrid::count_D0() const {
  int n = 0;
  for (const auto& c : cells) n += c.in_D0;
  return n;
}

RegionGrid build_region_grid(const VectorField& field, const EnergySpec& spec,
                             const BBox& bbox, int nx, int ny, double eta, double band) {
  if (nx < 16 || ny < 16) throw DomainError("build_region_grid: nx, ny must be >= 16");
  RegionGrid grid;
  grid.bbox = bbox;
  grid.nx = nx;
  grid.ny = ny;
  grid.cells.resize(static_cast<std::size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const Vec2 x = grid.cell_center(i, j);
      RegionCell& c = grid.cells[static_cast<std::size_t>(j) * nx + i];
      c.label = omega_label(field, x, eta, band);
      c.in_U = energy(spec, x) < spec.r;
      c.in_D0 = (c.label == RegionLabel::Omega) && c.in_U;
    }
  }
  return grid;
}

EnergyDecreaseReport validate_energy_decrease(const EnergySpec& spec, const VectorField& field,
                                              const RegionGrid& grid, double tol) {
  EnergyDecreaseReport report;

  double c1_over_delta = 0.0;
  double delta = 0.0, c1 = 0.0;
  if (spec.kind == EnergySpec::Kind::Network) {
    const NetworkParams& np = spec.network;
    delta = std::min(np.delta1, np.delta2);
    c1 = np.pi * np.W.operatorNorm();  // induced 2-norm of W
    c1_over_delta = c1 / delta;
    report.network_bound_checked = true;
  }

  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const RegionCell& c = grid.cell(i, j);
      const Vec2 x = grid.cell_center(i, j);
      if (c.in_D0) {
        ++report.d0_cells;
        const double rate = energy_rate(spec, field, x);
        if (rate > tol) {
          ++report.d0_violations;
          report.violating_cells.push_back(x);
        }
      } else if (c.in_U) {
        if (energy_rate(spec, field, x) > tol) ++report.u_only_violations;
      }
      if (report.network_bound_checked && x.norm() > c1_over_delta) {
        const double rate = energy_rate(spec, field, x);
        const double bound = -delta * x.norm() * (x.norm() - c1_over_delta);
        if (rate > bound + 1e-12) ++report.network_bound_violations;
      }
    }
  }
  report.pass_fraction =
      report.d0_cells == 0
          ? 1.0
          : 1.0 - static_cast<double>(report.d0_violations) / report.d0_cells;
  return report;
}

EquilibriaRegionReport equilibria_region_report(const std::vector<EquilibriumPoint>& eqs,
                                                const VectorField& field, double eta,
                                                double band) {
  EquilibriaRegionReport report;
  for (EquilibriumPoint eq : eqs) {
    eq.region = omega_label(field, eq.location, eta, band);
    eq.on_boundary_band = (eq.region == RegionLabel::Omega0);
    if (eq.on_boundary_band) {
      report.warnings.push_back("equilibrium at (" + std::to_string(eq.location.x()) + ", " +
                                std::to_string(eq.location.y()) +
                                ") lies in the Omega0 band; periodic behavior may emerge nearby");
    }
    report.eqs.push_back(eq);
  }
  return report;
}

}  // namespace c2
