#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace c2 {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using MatX = Eigen::MatrixXd;

/// Vector norms with induced matrix measures (logarithmic norms).
enum class NormKind { One, Two, Infinity };

/// Trichotomy of the state space by the sign of trace J(x):
/// Omega (negative, 2-contractive), Omega0 (boundary band), Omega1 (positive).
enum class RegionLabel { Omega, Omega0, Omega1, Unknown };

struct BBox {
  double x0, x1, y0, y1;

  bool contains(const Vec2& p) const {
    return p.x() >= x0 && p.x() <= x1 && p.y() >= y0 && p.y() <= y1;
  }
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
};

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EvaluationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline const char* to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::Omega: return "Omega";
    case RegionLabel::Omega0: return "Omega0";
    case RegionLabel::Omega1: return "Omega1";
    default: return "unknown";
  }
}

}  // namespace c2
