#pragma once

// Fixed-step RK4 integration of planar fields, convergence verdicts,
// seeded basin-of-attraction validation, and area (Liouville) tracking.

#include <cstdint>
#include <vector>

#include "c2/regions.hpp"
#include "c2/system.hpp"
#include "c2/types.hpp"

namespace c2 {

/// SplitMix64: deterministic 64-bit PRNG, identical across platforms.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// uniform double in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

enum class Verdict { Converged, Escaped, Undecided };

struct Trajectory {
  std::vector<double> times;
  std::vector<Vec2> states;
  Verdict verdict = Verdict::Undecided;
  Vec2 converged_to = Vec2::Zero();  // valid when verdict == Converged

  const Vec2& final_state() const { return states.back(); }
  double final_time() const { return times.back(); }
};

struct IntegrateOptions {
  std::vector<Vec2> equilibria;    // convergence targets
  double convergence_eps = 1e-3;   // distance defining "at an equilibrium"
  double dwell = 1.0;              // time the distance must stay below eps
  double escape_radius = 1e6;
  int store_stride = 1;            // keep every n-th state (first/last always kept)
};

/// Classic fixed-step RK4. Stops early once the state has stayed within
/// convergence_eps of one registered equilibrium for a full dwell window.
Trajectory integrate(const VectorField& field, const Vec2& x0, double dt, double t_max,
                     const IntegrateOptions& opts = {});

struct BoaSample {
  Vec2 x0;
  Verdict verdict;
  int equilibrium_hit = -1;  // index into the report's equilibria, -1 if none
  double final_distance = 0.0;
};

struct BoaReport {
  int n_samples = 0;
  int n_converged = 0;
  double converged_fraction = 0.0;
  std::vector<int> per_equilibrium;  // tally per equilibrium, same order as input
  double worst_final_distance = 0.0;
  std::vector<BoaSample> samples;

  std::vector<BoaSample> failures() const;
};

/// Integrates n_samples initial conditions drawn uniformly from D0 cells
/// (cell chosen by SplitMix64, sub-cell jitter) and tallies convergence.
BoaReport boa_validate(const VectorField& field, const RegionGrid& grid,
                       const std::vector<Vec2>& eqs, int n_samples, std::uint64_t seed,
                       double t_max, double dt = 1e-3);

struct AreaSeries {
  std::vector<double> times;
  std::vector<double> z;          // wedge y1 /\ y2 along the trajectory
  std::vector<double> predicted;  // z(0) exp(integral of trace J)
};

/// Co-integrates the base trajectory and two tangent vectors under the
/// variational flow dy = J(x) y dt; the wedge obeys Liouville's formula
/// z(t) = z(0) exp(integral of trace J).
AreaSeries area_evolution(const VectorField& field, const Vec2& x0, const Vec2& y1,
                          const Vec2& y2, double dt, double t_max);

struct PeriodicityResult {
  bool recurrence_suspected = false;
  double period_estimate = 0.0;
};

/// Near-return falsification probe: flags re-entry of a 1e-4 ball around the
/// (non-equilibrium) start point after the trajectory has left it, with the
/// velocity crossing in the same direction.
PeriodicityResult periodicity_probe(const VectorField& field, const Vec2& x0, double t_max,
                                    double dt = 1e-3);

}  // namespace c2
