#pragma once

// Planar vector fields with analytic Jacobians: general polynomial fields,
// the parametric double-well family, and the two-agent network system.

#include <string>
#include <vector>

#include "c2/types.hpp"

namespace c2 {

struct MonomialTerm {
  double coefficient = 0.0;
  int px = 0;  // exponent of x1
  int py = 0;  // exponent of x2
};

using Polynomial = std::vector<MonomialTerm>;

/// Parameters of the family
///   x1' = x2
///   x2' = b1 x1 + b2 x2 - b3 x1^(2s+1) + b4 x1^(2m) x2^(2q+1)
/// with b1, b3 > 0, s >= 1, m, q >= 0.
struct FamilyParams {
  double b1 = 1.0, b2 = -1.0, b3 = 1.0, b4 = 0.0;
  int s = 1, m = 0, q = 0;

  void validate() const;
};

enum class PsiKind { Tanh, Boltzmann };

/// Parameters of the network system x' = -Lambda x + pi W Psi(x) with
/// Lambda = diag(delta1, delta2), W hollow and non-negative, pi > 0.
struct NetworkParams {
  double delta1 = 0.2, delta2 = 0.4;
  Mat2 W = Mat2::Zero();
  double pi = 2.0;
  PsiKind psi = PsiKind::Tanh;

  void validate() const;
};

double psi_value(PsiKind kind, double u);
double psi_slope(PsiKind kind, double u);

/// Evaluatable planar field f: R^2 -> R^2 with an analytic Jacobian.
/// Immutable after construction; evaluation is pure.
class VectorField {
 public:
  enum class Kind { Polynomial, Family, Network };

  static VectorField polynomial(Polynomial f1, Polynomial f2);
  static VectorField family(const FamilyParams& params);
  static VectorField network(const NetworkParams& params);

  Kind kind() const { return kind_; }

  Vec2 evaluate(const Vec2& x) const;
  Vec2 operator()(const Vec2& x) const { return evaluate(x); }

  /// Exact analytic Jacobian (term-wise monomial differentiation, or the
  /// network closed form with -delta_i on the diagonal).
  Mat2 jacobian(const Vec2& x) const;

  /// trace J(x); for planar systems this is mu2 of the second additive
  /// compound of the Jacobian.
  double trace_j2(const Vec2& x) const;

  const FamilyParams* family_params() const {
    return kind_ == Kind::Family ? &family_ : nullptr;
  }
  const NetworkParams* network_params() const {
    return kind_ == Kind::Network ? &network_ : nullptr;
  }
  const Polynomial& component1() const { return f1_; }
  const Polynomial& component2() const { return f2_; }

 private:
  VectorField() = default;

  Kind kind_ = Kind::Polynomial;
  Polynomial f1_, f2_;  // used by Polynomial and Family kinds
  FamilyParams family_;
  NetworkParams network_;
};

VectorField family_to_field(const FamilyParams& params);
VectorField network_to_field(const NetworkParams& params);

/// x^p by repeated squaring, p >= 0.
double ipow(double x, int p);

}  // namespace c2
