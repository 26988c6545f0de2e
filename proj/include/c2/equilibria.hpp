#pragma once

// Equilibrium location (Newton from grid seeds, or the family closed form)
// and index-theoretic classification without linearization.

#include <functional>
#include <optional>
#include <vector>

#include "c2/system.hpp"
#include "c2/types.hpp"

namespace c2 {

enum class Nature { Stable, Saddle, Unstable, CenterLike, Unknown };

struct EquilibriumPoint {
  Vec2 location = Vec2::Zero();
  std::optional<int> index;
  Nature nature = Nature::Unknown;
  RegionLabel region = RegionLabel::Unknown;
  double residual = 0.0;
  bool on_boundary_band = false;  // warning flag: sits in the Omega0 band
};

/// The family's equilibrium set {(0,0), (+(b1/b3)^(1/2s), 0),
/// (-(b1/b3)^(1/2s), 0)}; independent of {m, q, b2, b4}.
std::vector<Vec2> family_equilibria(const FamilyParams& params);

struct NewtonResult {
  Vec2 root;
  double residual;
  std::vector<double> residual_history;
  bool converged;
};

/// Newton iteration with the analytic Jacobian from a single seed.
NewtonResult newton_polish(const VectorField& field, const Vec2& seed, double tol,
                           int max_iter = 60);

/// Newton from a seeds_per_axis x seeds_per_axis grid over bbox; converged
/// roots deduplicated within 1e-6 and sorted lexicographically. Roots that
/// land outside bbox are kept within a 10% margin, else discarded.
std::vector<EquilibriumPoint> find_equilibria(const VectorField& field, const BBox& bbox,
                                              int seeds_per_axis, double tol = 1e-10);

/// Assign per-equilibrium indices from small enclosing circles and natures
/// from the index/region argument: index -1 -> saddle; index +1 in Omega ->
/// stable; index +1 in Omega1 -> unstable; on the Omega0 band -> unknown
/// with a warning flag.
std::vector<EquilibriumPoint> classify(std::vector<EquilibriumPoint> eqs,
                                       const VectorField& field,
                                       const std::function<RegionLabel(const Vec2&)>& region_of);

/// Eigenvalue-based classification, used only as an independent test oracle.
Nature oracle_classify_eigen(const VectorField& field, const Vec2& eq);

}  // namespace c2
