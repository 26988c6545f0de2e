#include "c2/poincare.hpp"

#include <cmath>

namespace c2 {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kMinFieldNorm = 1e-9;
constexpr double kRefineTrigger = kPi / 2.0;
constexpr int kMaxDepth = 12;
constexpr double kResidualGate = 0.1;

// map an angle difference to (-pi, pi]
double wrap_increment(double d) {
  d = std::fmod(d + kPi, 2.0 * kPi);
  if (d <= 0.0) d += 2.0 * kPi;
  return d - kPi;
}

bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  auto cross = [](const Vec2& u, const Vec2& v) { return u.x() * v.y() - u.y() * v.x(); };
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

struct AngleTracker {
  const VectorField& field;
  const ClosedCurve& curve;
  int evaluations = 0;
  double max_step = 0.0;

  double angle_at(double t) {
    const Vec2 f = field(curve.at(t));
    ++evaluations;
    if (f.norm() < kMinFieldNorm)
      throw EvaluationError("winding_number: curve passes through a field zero");
    return std::atan2(f.y(), f.x());
  }

  double accumulate(double t0, double a0, double t1, double a1, int depth) {
    const double d = wrap_increment(a1 - a0);
    if (std::abs(d) > kRefineTrigger) {
      if (depth >= kMaxDepth) {
        if (std::abs(d) >= kPi - 1e-9)
          throw EvaluationError("winding_number: unwrap ambiguity after refinement");
        max_step = std::max(max_step, std::abs(d));
        return d;
      }
      const double tm = 0.5 * (t0 + t1);
      const double am = angle_at(tm);
      return accumulate(t0, a0, tm, am, depth + 1) + accumulate(tm, am, t1, a1, depth + 1);
    }
    max_step = std::max(max_step, std::abs(d));
    return d;
  }
};

}  // namespace

ClosedCurve ClosedCurve::circle(const Vec2& center, double radius) {
  if (!(radius > 0.0)) throw DomainError("circle radius must be positive");
  ClosedCurve c;
  c.shape_ = Circle{center, radius};
  return c;
}

ClosedCurve ClosedCurve::polyline(std::vector<Vec2> points) {
  if (points.size() >= 2 && (points.front() - points.back()).norm() < 1e-12)
    points.pop_back();  // accept an explicitly closed list
  if (points.size() < 8) throw DomainError("polyline curve needs at least 8 points");
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;  // adjacent segments share a vertex
      if (segments_intersect(points[i], points[(i + 1) % n], points[j], points[(j + 1) % n]))
        throw DomainError("polyline curve is self-intersecting");
    }
  }
  ClosedCurve c;
  c.shape_ = std::move(points);
  return c;
}

Vec2 ClosedCurve::at(double t) const {
  t -= std::floor(t);
  if (const Circle* c = std::get_if<Circle>(&shape_)) {
    const double th = 2.0 * kPi * t;
    return c->center + c->radius * Vec2(std::cos(th), std::sin(th));
  }
  const auto& pts = std::get<std::vector<Vec2>>(shape_);
  const double s = t * pts.size();
  const int seg = static_cast<int>(s) % static_cast<int>(pts.size());
  const double frac = s - std::floor(s);
  const Vec2& a = pts[seg];
  const Vec2& b = pts[(seg + 1) % pts.size()];
  return a + frac * (b - a);
}

IndexResult winding_number(const VectorField& field, const ClosedCurve& curve,
                           int initial_samples) {
  if (initial_samples < 16) throw DomainError("winding_number: initial_samples must be >= 16");

  AngleTracker tracker{field, curve};
  std::vector<double> angles(initial_samples + 1);
  for (int i = 0; i < initial_samples; ++i)
    angles[i] = tracker.angle_at(static_cast<double>(i) / initial_samples);
  angles[initial_samples] = angles[0];

  double total = 0.0;
  for (int i = 0; i < initial_samples; ++i) {
    const double t0 = static_cast<double>(i) / initial_samples;
    const double t1 = static_cast<double>(i + 1) / initial_samples;
    total += tracker.accumulate(t0, angles[i], t1, angles[i + 1], 0);
  }

  const int index = static_cast<int>(std::lround(total / (2.0 * kPi)));
  if (std::abs(total - 2.0 * kPi * index) >= kResidualGate)
    throw EvaluationError("winding_number: angle total inconsistent with an integer index");

  IndexResult result;
  result.index = index;
  result.total_angle_change = total;
  result.samples_used = tracker.evaluations;
  result.max_step_angle = tracker.max_step;
  return result;
}

std::vector<AppendixRow> appendix_a_table(const VectorField& field, double radius) {
  if (!(radius > 0.0)) throw DomainError("appendix_a_table: radius must be positive");
  const ClosedCurve curve = ClosedCurve::circle(Vec2::Zero(), radius);
  AngleTracker tracker{field, curve};

  std::vector<AppendixRow> rows;
  double prev_angle = 0.0;
  for (int quarter = 0; quarter <= 4; ++quarter) {
    const double theta = quarter * kPi / 2.0;
    const Vec2 p(radius * std::cos(theta), radius * std::sin(theta));
    const Vec2 f = field(p);
    double phi_deg = std::atan2(f.y(), f.x()) * 180.0 / kPi;
    if (phi_deg < 0.0) phi_deg += 360.0;

    AppendixRow row{theta, f.x(), f.y(), phi_deg, std::nullopt};
    if (quarter > 0) {
      const double t0 = (quarter - 1) / 4.0;
      const double t1 = quarter / 4.0;
      const double a1 = tracker.angle_at(t1);
      row.dphi_deg = tracker.accumulate(t0, prev_angle, t1, a1, 0) * 180.0 / kPi;
      prev_angle = a1;
    } else {
      prev_angle = tracker.angle_at(0.0);
    }
    rows.push_back(row);
  }
  return rows;
}

double equilibrium_circle_radius(const Vec2& eq, const std::vector<Vec2>& all) {
  double nearest = std::numeric_limits<double>::infinity();
  for (const auto& other : all) {
    const double d = (other - eq).norm();
    if (d > 1e-12) nearest = std::min(nearest, d);
  }
  return std::isfinite(nearest) ? std::min(nearest / 4.0, 0.5) : 0.5;
}

bool index_additivity_check(const VectorField& field, const std::vector<Vec2>& eqs,
                            const ClosedCurve& enclosing) {
  const int total = winding_number(field, enclosing).index;
  int sum = 0;
  for (const auto& eq : eqs) {
    const double r = equilibrium_circle_radius(eq, eqs);
    sum += winding_number(field, ClosedCurve::circle(eq, r)).index;
  }
  return total == sum;
}

}  // namespace c2
