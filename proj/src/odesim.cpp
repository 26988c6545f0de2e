#include "c2/odesim.hpp"

#include <cmath>

namespace c2 {

namespace {

Vec2 rk4_step(const VectorField& field, const Vec2& x, double dt) {
  const Vec2 k1 = field(x);
  const Vec2 k2 = field(x + 0.5 * dt * k1);
  const Vec2 k3 = field(x + 0.5 * dt * k2);
  const Vec2 k4 = field(x + dt * k3);
  return x + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 < 1e-300) return (p - a).norm();
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

}  // namespace

Trajectory integrate(const VectorField& field, const Vec2& x0, double dt, double t_max,
                     const IntegrateOptions& opts) {
  if (!(dt > 0.0) || !(t_max > 0.0) || dt > t_max)
    throw DomainError("integrate: need 0 < dt <= t_max");

  Trajectory traj;
  traj.times.push_back(0.0);
  traj.states.push_back(x0);

  Vec2 x = x0;
  int dwell_eq = -1;
  double dwell_start = 0.0;
  const long n_steps = static_cast<long>(std::ceil(t_max / dt - 1e-12));

  for (long step = 1; step <= n_steps; ++step) {
    x = rk4_step(field, x, dt);
    const double t = step * dt;
    if (!x.allFinite()) throw EvaluationError("integrate: state became non-finite");

    const bool last = (step == n_steps);
    if (last || step % opts.store_stride == 0) {
      traj.times.push_back(t);
      traj.states.push_back(x);
    }

    if (x.norm() > opts.escape_radius) {
      if (traj.times.back() != t) {
        traj.times.push_back(t);
        traj.states.push_back(x);
      }
      traj.verdict = Verdict::Escaped;
      return traj;
    }

    int near = -1;
    for (std::size_t k = 0; k < opts.equilibria.size(); ++k) {
      if ((x - opts.equilibria[k]).norm() < opts.convergence_eps) {
        near = static_cast<int>(k);
        break;
      }
    }
    if (near != dwell_eq) {
      dwell_eq = near;
      dwell_start = t;
    } else if (near >= 0 && t - dwell_start >= opts.dwell) {
      if (traj.times.back() != t) {
        traj.times.push_back(t);
        traj.states.push_back(x);
      }
      traj.verdict = Verdict::Converged;
      traj.converged_to = opts.equilibria[near];
      return traj;
    }
  }
  return traj;
}

std::vector<BoaSample> BoaReport::failures() const {
  std::vector<BoaSample> out;
  for (const auto& s : samples)
    if (s.verdict != Verdict::Converged) out.push_back(s);
  return out;
}

BoaReport boa_validate(const VectorField& field, const RegionGrid& grid,
                       const std::vector<Vec2>& eqs, int n_samples, std::uint64_t seed,
                       double t_max, double dt) {
  if (eqs.empty()) throw DomainError("boa_validate: equilibrium list is empty");
  std::vector<std::pair<int, int>> d0_cells;
  for (int j = 0; j < grid.ny; ++j)
    for (int i = 0; i < grid.nx; ++i)
      if (grid.cell(i, j).in_D0) d0_cells.emplace_back(i, j);
  if (d0_cells.empty()) throw DomainError("boa_validate: grid has no D0 cells");

  const double cw = grid.bbox.width() / grid.nx;
  const double ch = grid.bbox.height() / grid.ny;

  SplitMix64 rng(seed);
  BoaReport report;
  report.n_samples = n_samples;
  report.per_equilibrium.assign(eqs.size(), 0);

  IntegrateOptions opts;
  opts.equilibria = eqs;
  opts.store_stride = 1000;

  for (int s = 0; s < n_samples; ++s) {
    const auto [ci, cj] = d0_cells[rng.next() % d0_cells.size()];
    const Vec2 center = grid.cell_center(ci, cj);
    const Vec2 x0 = center + Vec2((rng.uniform() - 0.5) * cw, (rng.uniform() - 0.5) * ch);

    const Trajectory traj = integrate(field, x0, dt, t_max, opts);

    BoaSample sample;
    sample.x0 = x0;
    sample.verdict = traj.verdict;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < eqs.size(); ++k)
      best = std::min(best, (traj.final_state() - eqs[k]).norm());
    sample.final_distance = best;
    if (traj.verdict == Verdict::Converged) {
      ++report.n_converged;
      for (std::size_t k = 0; k < eqs.size(); ++k) {
        if ((traj.converged_to - eqs[k]).norm() < 1e-12) {
          sample.equilibrium_hit = static_cast<int>(k);
          ++report.per_equilibrium[k];
          break;
        }
      }
    }
    report.worst_final_distance = std::max(report.worst_final_distance, sample.final_distance);
    report.samples.push_back(sample);
  }
  report.converged_fraction =
      n_samples == 0 ? 0.0 : static_cast<double>(report.n_converged) / n_samples;
  return report;
}

AreaSeries area_evolution(const VectorField& field, const Vec2& x0, const Vec2& y1,
                          const Vec2& y2, double dt, double t_max) {
  const double z0 = y1.x() * y2.y() - y1.y() * y2.x();
  if (std::abs(z0) <= 1e-12)
    throw DomainError("area_evolution: tangent vectors are (nearly) linearly dependent");

  using State = Eigen::Matrix<double, 6, 1>;
  State u;
  u << x0, y1, y2;

  auto deriv = [&](const State& s) {
    const Vec2 x = s.head<2>();
    const Mat2 J = field.jacobian(x);
    State d;
    d.head<2>() = field(x);
    d.segment<2>(2) = J * s.segment<2>(2);
    d.tail<2>() = J * s.tail<2>();
    return d;
  };

  AreaSeries series;
  double scale = 1.0;  // accumulated renormalization factor applied to tangents
  double trace_integral = 0.0;
  double prev_trace = field.trace_j2(x0);

  auto wedge = [&](const State& s) {
    return (s(2) * s(5) - s(3) * s(4)) / (scale * scale);
  };

  series.times.push_back(0.0);
  series.z.push_back(wedge(u));
  series.predicted.push_back(z0);

  const long n_steps = static_cast<long>(std::ceil(t_max / dt - 1e-12));
  for (long step = 1; step <= n_steps; ++step) {
    const State k1 = deriv(u);
    const State k2 = deriv(u + 0.5 * dt * k1);
    const State k3 = deriv(u + 0.5 * dt * k2);
    const State k4 = deriv(u + dt * k3);
    u += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const double tr = field.trace_j2(u.head<2>());
    trace_integral += 0.5 * dt * (prev_trace + tr);
    prev_trace = tr;

    if (u.tail<4>().cwiseAbs().maxCoeff() > 1e12) {
      u.tail<4>() *= 1e-12;
      scale *= 1e-12;
    }

    series.times.push_back(step * dt);
    series.z.push_back(wedge(u));
    series.predicted.push_back(z0 * std::exp(trace_integral));
  }
  return series;
}

PeriodicityResult periodicity_probe(const VectorField& field, const Vec2& x0, double t_max,
                                    double dt) {
  PeriodicityResult result;
  const Vec2 f0 = field(x0);
  if (f0.norm() < 1e-9) return result;  // start is an equilibrium: stationary, no recurrence

  constexpr double kBall = 1e-4;
  const double leave_radius = 10.0 * kBall;

  Vec2 x = x0;
  bool left = false;
  const long n_steps = static_cast<long>(std::ceil(t_max / dt - 1e-12));
  for (long step = 1; step <= n_steps; ++step) {
    const Vec2 x_next = rk4_step(field, x, dt);
    const double t = step * dt;
    if (!left) {
      if ((x_next - x0).norm() > leave_radius) left = true;
    } else if (point_segment_distance(x0, x, x_next) < kBall) {
      const Vec2 f = field(x_next);
      if (f.norm() > 1e-9 && f.dot(f0) > 0.0) {  // transversal, same-direction crossing
        result.recurrence_suspected = true;
        result.period_estimate = t;
        return result;
      }
    }
    x = x_next;
    if (!x.allFinite() || x.norm() > 1e6) break;
  }
  return result;
}

}  // namespace c2
