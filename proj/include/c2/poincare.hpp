#pragma once

// Numerical Poincare index of a closed curve by angle tracking with
// unwrapping and adaptive bisection refinement.

#include <optional>
#include <variant>
#include <vector>

#include "c2/system.hpp"
#include "c2/types.hpp"

namespace c2 {

struct Circle {
  Vec2 center;
  double radius;
};

/// Simple closed curve: a counterclockwise circle or a closed polyline of at
/// least 8 vertices. Reversing the vertex order reverses orientation.
class ClosedCurve {
 public:
  static ClosedCurve circle(const Vec2& center, double radius);
  static ClosedCurve polyline(std::vector<Vec2> points);

  /// Point at parameter t in [0, 1); t = 0 and t = 1 coincide.
  Vec2 at(double t) const;

  bool is_circle() const { return std::holds_alternative<Circle>(shape_); }
  const Circle* as_circle() const { return std::get_if<Circle>(&shape_); }

 private:
  std::variant<Circle, std::vector<Vec2>> shape_;
};

struct IndexResult {
  int index = 0;
  double total_angle_change = 0.0;  // radians
  int samples_used = 0;
  double max_step_angle = 0.0;
};

/// Winding number of f along the curve: accumulates atan2 angle increments
/// mapped to (-pi, pi], bisecting any step larger than pi/2 (up to 12
/// levels). Throws EvaluationError if the curve passes through a field zero
/// (|f| < 1e-9), if refinement cannot reduce a step below pi, or if the
/// accumulated angle is farther than 0.1 rad from a multiple of 2 pi.
IndexResult winding_number(const VectorField& field, const ClosedCurve& curve,
                           int initial_samples = 64);

struct AppendixRow {
  double theta;    // radians
  double f1, f2;   // field components on the curve
  double phi_deg;  // direction angle in [0, 360)
  std::optional<double> dphi_deg;  // increment from the previous row
};

/// Direction-angle table at theta in {0, pi/2, pi, 3pi/2, 2pi} on the circle
/// of the given radius about the origin, with cumulative quadrant increments.
std::vector<AppendixRow> appendix_a_table(const VectorField& field, double radius);

/// True iff the winding of the enclosing curve equals the sum of the
/// windings of small circles around each equilibrium.
bool index_additivity_check(const VectorField& field, const std::vector<Vec2>& eqs,
                            const ClosedCurve& enclosing);

/// Radius for a per-equilibrium index circle: a quarter of the distance to
/// the nearest other equilibrium, capped at 0.5.
double equilibrium_circle_radius(const Vec2& eq, const std::vector<Vec2>& all);

}  // namespace c2
