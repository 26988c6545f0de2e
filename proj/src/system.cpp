#include "c2/system.hpp"

#include <cmath>

namespace c2 {

namespace {

constexpr double kOverflowLimit = 1e300;
constexpr int kMaxPower = 20;

void check_finite(double v, const char* component) {
  if (!std::isfinite(v) || std::abs(v) > kOverflowLimit)
    throw EvaluationError(std::string("field evaluation overflow in ") + component);
}

double eval_poly(const Polynomial& p, const Vec2& x) {
  double acc = 0.0;
  for (const auto& t : p) acc += t.coefficient * ipow(x.x(), t.px) * ipow(x.y(), t.py);
  return acc;
}

// d/dx1 and d/dx2 of a monomial sum, evaluated at x.
double eval_poly_dx(const Polynomial& p, const Vec2& x) {
  double acc = 0.0;
  for (const auto& t : p)
    if (t.px > 0) acc += t.coefficient * t.px * ipow(x.x(), t.px - 1) * ipow(x.y(), t.py);
  return acc;
}

double eval_poly_dy(const Polynomial& p, const Vec2& x) {
  double acc = 0.0;
  for (const auto& t : p)
    if (t.py > 0) acc += t.coefficient * t.py * ipow(x.x(), t.px) * ipow(x.y(), t.py - 1);
  return acc;
}

void check_terms(const Polynomial& p) {
  for (const auto& t : p) {
    if (!std::isfinite(t.coefficient)) throw DomainError("monomial coefficient not finite");
    if (t.px < 0 || t.py < 0 || t.px > kMaxPower || t.py > kMaxPower)
      throw DomainError("monomial exponent outside [0, 20]");
  }
}

}  // namespace

double ipow(double x, int p) {
  double acc = 1.0, base = x;
  for (; p > 0; p >>= 1) {
    if (p & 1) acc *= base;
    base *= base;
  }
  return acc;
}

void FamilyParams::validate() const {
  if (!(b1 > 0.0) || !(b3 > 0.0)) throw DomainError("family params require b1 > 0 and b3 > 0");
  if (s < 1) throw DomainError("family params require s >= 1");
  if (m < 0 || q < 0) throw DomainError("family params require m, q >= 0");
  for (double b : {b1, b2, b3, b4})
    if (!std::isfinite(b)) throw DomainError("family params must be finite");
}

void NetworkParams::validate() const {
  if (!(delta1 > 0.0) || !(delta2 > 0.0)) throw DomainError("network params require delta_i > 0");
  if (!(pi > 0.0)) throw DomainError("network params require pi > 0");
  if (W(0, 0) != 0.0 || W(1, 1) != 0.0) throw DomainError("adjacency matrix W must be hollow");
  if (W(0, 1) < 0.0 || W(1, 0) < 0.0) throw DomainError("adjacency matrix W must be non-negative");
}

double psi_value(PsiKind kind, double u) {
  switch (kind) {
    case PsiKind::Tanh:
      return std::tanh(u);
    case PsiKind::Boltzmann: {
      const double e = std::exp(-2.0 * u);
      return (1.0 - e) / (1.0 + e);
    }
  }
  return 0.0;
}

double psi_slope(PsiKind kind, double u) {
  // both nonlinearities coincide with tanh, so psi' = 1 - psi^2
  const double v = psi_value(kind, u);
  return 1.0 - v * v;
}

VectorField VectorField::polynomial(Polynomial f1, Polynomial f2) {
  check_terms(f1);
  check_terms(f2);
  VectorField vf;
  vf.kind_ = Kind::Polynomial;
  vf.f1_ = std::move(f1);
  vf.f2_ = std::move(f2);
  return vf;
}

VectorField VectorField::family(const FamilyParams& params) {
  params.validate();
  VectorField vf;
  vf.kind_ = Kind::Family;
  vf.family_ = params;
  vf.f1_ = {{1.0, 0, 1}};  // x2
  vf.f2_ = {{params.b1, 1, 0}, {params.b2, 0, 1}, {-params.b3, 2 * params.s + 1, 0}};
  if (params.b4 != 0.0)
    vf.f2_.push_back({params.b4, 2 * params.m, 2 * params.q + 1});
  check_terms(vf.f2_);
  return vf;
}

VectorField VectorField::network(const NetworkParams& params) {
  params.validate();
  VectorField vf;
  vf.kind_ = Kind::Network;
  vf.network_ = params;
  return vf;
}

Vec2 VectorField::evaluate(const Vec2& x) const {
  if (!x.allFinite()) throw EvaluationError("field evaluated at non-finite point");
  Vec2 out;
  if (kind_ == Kind::Network) {
    const Vec2 psi(psi_value(network_.psi, x.x()), psi_value(network_.psi, x.y()));
    out.x() = -network_.delta1 * x.x() + network_.pi * network_.W(0, 1) * psi.y();
    out.y() = -network_.delta2 * x.y() + network_.pi * network_.W(1, 0) * psi.x();
  } else {
    out.x() = eval_poly(f1_, x);
    out.y() = eval_poly(f2_, x);
  }
  check_finite(out.x(), "component 1");
  check_finite(out.y(), "component 2");
  return out;
}

Mat2 VectorField::jacobian(const Vec2& x) const {
  if (!x.allFinite()) throw EvaluationError("jacobian evaluated at non-finite point");
  Mat2 J;
  if (kind_ == Kind::Network) {
    J(0, 0) = -network_.delta1;
    J(1, 1) = -network_.delta2;
    J(0, 1) = network_.pi * network_.W(0, 1) * psi_slope(network_.psi, x.y());
    J(1, 0) = network_.pi * network_.W(1, 0) * psi_slope(network_.psi, x.x());
  } else {
    J(0, 0) = eval_poly_dx(f1_, x);
    J(0, 1) = eval_poly_dy(f1_, x);
    J(1, 0) = eval_poly_dx(f2_, x);
    J(1, 1) = eval_poly_dy(f2_, x);
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) check_finite(J(i, j), "jacobian");
  return J;
}

double VectorField::trace_j2(const Vec2& x) const {
  const Mat2 J = jacobian(x);
  return J(0, 0) + J(1, 1);
}

VectorField family_to_field(const FamilyParams& params) { return VectorField::family(params); }

VectorField network_to_field(const NetworkParams& params) { return VectorField::network(params); }

}  // namespace c2
