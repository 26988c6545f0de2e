#include "c2/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "c2/poincare.hpp"

namespace c2 {

namespace {

constexpr double kDedupTol = 1e-6;
constexpr double kBBoxMargin = 0.1;
constexpr double kMinCircleRadius = 1e-6;

bool lex_less(const Vec2& a, const Vec2& b) {
  if (a.x() != b.x()) return a.x() < b.x();
  return a.y() < b.y();
}

}  // namespace

std::vector<Vec2> family_equilibria(const FamilyParams& params) {
  params.validate();
  const double root = std::pow(params.b1 / params.b3, 1.0 / (2.0 * params.s));
  return {Vec2(0.0, 0.0), Vec2(root, 0.0), Vec2(-root, 0.0)};
}

NewtonResult newton_polish(const VectorField& field, const Vec2& seed, double tol,
                           int max_iter) {
  NewtonResult result{seed, std::numeric_limits<double>::infinity(), {}, false};
  Vec2 x = seed;
  for (int it = 0; it < max_iter; ++it) {
    Vec2 f;
    try {
      f = field(x);
    } catch (const EvaluationError&) {
      return result;  // iterate escaped the representable range
    }
    const double res = f.norm();
    result.root = x;
    result.residual = res;
    result.residual_history.push_back(res);
    if (res < tol) {
      result.converged = true;
      return result;
    }
    const Mat2 J = field.jacobian(x);
    const double det = J(0, 0) * J(1, 1) - J(0, 1) * J(1, 0);
    if (std::abs(det) < 1e-14) return result;  // singular Jacobian, abandon seed
    x -= J.inverse() * f;
    if (!x.allFinite()) return result;
  }
  return result;
}

std::vector<EquilibriumPoint> find_equilibria(const VectorField& field, const BBox& bbox,
                                              int seeds_per_axis, double tol) {
  if (seeds_per_axis < 3) throw DomainError("find_equilibria: seeds_per_axis must be >= 3");
  if (!(bbox.width() > 0.0) || !(bbox.height() > 0.0))
    throw DomainError("find_equilibria: degenerate bounding box");

  const double mx = kBBoxMargin * bbox.width();
  const double my = kBBoxMargin * bbox.height();

  std::vector<Vec2> roots;
  std::vector<double> residuals;
  for (int i = 0; i < seeds_per_axis; ++i) {
    for (int j = 0; j < seeds_per_axis; ++j) {
      const Vec2 seed(bbox.x0 + (i + 0.5) * bbox.width() / seeds_per_axis,
                      bbox.y0 + (j + 0.5) * bbox.height() / seeds_per_axis);
      const NewtonResult nr = newton_polish(field, seed, tol);
      if (!nr.converged) continue;
      if (nr.root.x() < bbox.x0 - mx || nr.root.x() > bbox.x1 + mx ||
          nr.root.y() < bbox.y0 - my || nr.root.y() > bbox.y1 + my)
        continue;
      bool duplicate = false;
      for (std::size_t r = 0; r < roots.size(); ++r) {
        if ((roots[r] - nr.root).norm() < kDedupTol) {
          duplicate = true;
          if (nr.residual < residuals[r]) {
            roots[r] = nr.root;
            residuals[r] = nr.residual;
          }
          break;
        }
      }
      if (!duplicate) {
        roots.push_back(nr.root);
        residuals.push_back(nr.residual);
      }
    }
  }

  std::vector<std::size_t> order(roots.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return lex_less(roots[a], roots[b]); });

  std::vector<EquilibriumPoint> out;
  for (std::size_t i : order) {
    EquilibriumPoint eq;
    eq.location = roots[i];
    eq.residual = residuals[i];
    out.push_back(eq);
  }
  return out;
}

std::vector<EquilibriumPoint> classify(std::vector<EquilibriumPoint> eqs,
                                       const VectorField& field,
                                       const std::function<RegionLabel(const Vec2&)>& region_of) {
  std::vector<Vec2> locations;
  for (const auto& eq : eqs) locations.push_back(eq.location);

  for (auto& eq : eqs) {
    double radius = equilibrium_circle_radius(eq.location, locations);
    std::optional<IndexResult> idx;
    while (radius >= kMinCircleRadius) {
      try {
        idx = winding_number(field, ClosedCurve::circle(eq.location, radius));
        break;
      } catch (const EvaluationError&) {
        radius *= 0.5;  // circle too close to another field zero
      }
    }
    if (!idx) throw EvaluationError("classify: no valid index circle around equilibrium");
    eq.index = idx->index;

    eq.region = region_of(eq.location);
    eq.on_boundary_band = (eq.region == RegionLabel::Omega0);
    if (eq.on_boundary_band) {
      eq.nature = Nature::Unknown;
    } else if (idx->index == -1) {
      eq.nature = Nature::Saddle;
    } else if (idx->index == +1) {
      if (eq.region == RegionLabel::Omega)
        eq.nature = Nature::Stable;  // Omega admits no unstable equilibria
      else if (eq.region == RegionLabel::Omega1)
        eq.nature = Nature::Unstable;  // Omega1 admits no stable ones; saddle excluded by index
      else
        eq.nature = Nature::Unknown;
    } else {
      eq.nature = Nature::Unknown;
    }
  }
  return eqs;
}

Nature oracle_classify_eigen(const VectorField& field, const Vec2& eq) {
  if (field(eq).norm() >= 1e-8)
    throw DomainError("oracle_classify_eigen: point is not an equilibrium");
  const Mat2 J = field.jacobian(eq);
  const Eigen::EigenSolver<Mat2> es(J);
  const double r0 = es.eigenvalues()(0).real();
  const double r1 = es.eigenvalues()(1).real();
  if (r0 == 0.0 || r1 == 0.0) return Nature::CenterLike;
  if (r0 < 0.0 && r1 < 0.0) return Nature::Stable;
  if (r0 > 0.0 && r1 > 0.0) return Nature::Unstable;
  return Nature::Saddle;
}

}  // namespace c2
