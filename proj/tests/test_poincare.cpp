#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "c2/io.hpp"
#include "c2/poincare.hpp"

using namespace c2;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Independent oracle: dense uniform sampling with plain unwrapping.
int brute_force_index(const VectorField& field, const Vec2& center, double radius,
                      int samples = 100000) {
  double total = 0.0, prev = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double th = 2.0 * kPi * i / samples;
    const Vec2 f = field(center + radius * Vec2(std::cos(th), std::sin(th)));
    const double a = std::atan2(f.y(), f.x());
    if (i > 0) {
      double d = a - prev;
      while (d > kPi) d -= 2.0 * kPi;
      while (d <= -kPi) d += 2.0 * kPi;
      total += d;
    }
    prev = a;
  }
  return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

}  // namespace

TEST_CASE("winding number around the example1 equilibrium sets") {
  const VectorField f = preset_by_name("example1").field;

  const IndexResult all = winding_number(f, ClosedCurve::circle(Vec2::Zero(), 4.0));
  CHECK(all.index == +1);
  CHECK(all.total_angle_change == doctest::Approx(2.0 * kPi).epsilon(1e-9));
  CHECK(all.max_step_angle < kPi);

  const IndexResult saddle = winding_number(f, ClosedCurve::circle(Vec2::Zero(), 0.5));
  CHECK(saddle.index == -1);
  CHECK(saddle.index == brute_force_index(f, Vec2::Zero(), 0.5));

  const IndexResult empty = winding_number(f, ClosedCurve::circle(Vec2(5, 5), 0.5));
  CHECK(empty.index == 0);
}

TEST_CASE("index is invariant to sample count and circle radius") {
  const VectorField f = preset_by_name("example2").field;
  for (int n : {16, 64, 256, 1024}) {
    CHECK(winding_number(f, ClosedCurve::circle(Vec2::Zero(), 4.0), n).index == +1);
  }
  for (double r : {3.0, 4.0, 6.0}) {
    CHECK(winding_number(f, ClosedCurve::circle(Vec2::Zero(), r)).index == +1);
  }
  // small circles around the single enclosed equilibrium agree across radii
  for (double r : {0.1, 0.3, 0.5}) {
    CHECK(winding_number(f, ClosedCurve::circle(Vec2(2, 0), r)).index == +1);
    CHECK(winding_number(f, ClosedCurve::circle(Vec2::Zero(), r)).index == -1);
  }
}

TEST_CASE("reversing curve orientation negates the index") {
  const VectorField f = preset_by_name("example1").field;
  std::vector<Vec2> ccw, cw;
  for (int i = 0; i < 64; ++i) {
    const double th = 2.0 * kPi * i / 64;
    ccw.push_back(4.0 * Vec2(std::cos(th), std::sin(th)));
  }
  cw.assign(ccw.rbegin(), ccw.rend());
  CHECK(winding_number(f, ClosedCurve::polyline(ccw)).index == +1);
  CHECK(winding_number(f, ClosedCurve::polyline(cw)).index == -1);
}

TEST_CASE("residual after refinement is small on all presets") {
  for (const auto& name : preset_names()) {
    const Preset p = preset_by_name(name);
    const IndexResult r = winding_number(p.field, ClosedCurve::circle(Vec2::Zero(), p.curve_radius));
    CHECK(std::abs(r.total_angle_change - 2.0 * kPi * r.index) < 0.01);
  }
}

TEST_CASE("curve validation and error paths") {
  CHECK_THROWS_AS(ClosedCurve::circle(Vec2::Zero(), 0.0), DomainError);
  CHECK_THROWS_AS(ClosedCurve::polyline({{0, 0}, {1, 0}, {1, 1}}), DomainError);

  // figure-eight polyline is self-intersecting
  std::vector<Vec2> eight;
  for (int i = 0; i < 32; ++i) {
    const double t = 2.0 * kPi * i / 32;
    eight.push_back(Vec2(std::sin(2.0 * t), std::sin(t)));
  }
  CHECK_THROWS_AS(ClosedCurve::polyline(eight), DomainError);

  // curve through an equilibrium
  const VectorField f = preset_by_name("example1").field;
  CHECK_THROWS_AS(winding_number(f, ClosedCurve::circle(Vec2(0.5, 0), 0.5)), EvaluationError);
  CHECK_THROWS_AS(winding_number(f, ClosedCurve::circle(Vec2::Zero(), 4.0), 8), DomainError);
}

TEST_CASE("appendix table on the radius-4 circle") {
  const VectorField f = preset_by_name("example1").field;
  const auto rows = appendix_a_table(f, 4.0);
  REQUIRE(rows.size() == 5);

  CHECK(rows[0].f1 == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(rows[0].f2 == doctest::Approx(-60.0));
  CHECK(rows[0].phi_deg == doctest::Approx(270.0));
  CHECK_FALSE(rows[0].dphi_deg.has_value());

  CHECK(rows[1].f1 == doctest::Approx(4.0));
  CHECK(rows[1].f2 == doctest::Approx(-4.0));
  CHECK(rows[1].phi_deg == doctest::Approx(315.0));
  CHECK(*rows[1].dphi_deg == doctest::Approx(45.0).epsilon(1e-9));

  CHECK(rows[2].f2 == doctest::Approx(60.0));
  CHECK(rows[2].phi_deg == doctest::Approx(90.0));
  CHECK(*rows[2].dphi_deg == doctest::Approx(135.0).epsilon(1e-9));

  CHECK(*rows[3].dphi_deg == doctest::Approx(45.0).epsilon(1e-9));
  CHECK(*rows[4].dphi_deg == doctest::Approx(135.0).epsilon(1e-9));

  double sum = 0.0;
  for (const auto& r : rows)
    if (r.dphi_deg) sum += *r.dphi_deg;
  CHECK(sum == doctest::Approx(360.0).epsilon(1e-9));
}

TEST_CASE("index additivity over enclosed equilibria") {
  const VectorField f1 = preset_by_name("example1").field;
  const std::vector<Vec2> eqs1 = {{0, 0}, {1, 0}, {-1, 0}};
  CHECK(index_additivity_check(f1, eqs1, ClosedCurve::circle(Vec2::Zero(), 4.0)));

  const VectorField f2 = preset_by_name("example2").field;
  const std::vector<Vec2> eqs2 = {{0, 0}, {2, 0}, {-2, 0}};
  CHECK(index_additivity_check(f2, eqs2, ClosedCurve::circle(Vec2::Zero(), 4.0)));

  // single-equilibrium enclosure: the sum is the curve's own index
  CHECK(index_additivity_check(f1, {Vec2(1, 0)}, ClosedCurve::circle(Vec2(1, 0), 0.3)));
}
