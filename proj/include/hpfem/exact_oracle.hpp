#pragma once

#include <array>

#include "hpfem/geometry.hpp"
#include "hpfem/layer_mesh.hpp"
#include "hpfem/problem.hpp"

namespace hpfem {

struct RadialValue {
  double value = 0.0;
  double derivative = 0.0;  // d/dr
};

/// Closed-form radial solution for constant data f+ = f- = f and h:
///   u+(r) = f + A I0(r/eps) + B K0(r/eps)   on [a, b]
///   u-(r) = f + C I0(r)     + D K0(r)       on [b, c]
/// The plus coefficients are stored as A = A' e^{-b/eps}, B = B' e^{a/eps} so every
/// exponent formed at evaluation, (r - b)/eps and (a - r)/eps, is non-positive.
/// The flux condition solved for is eps^2 u+'(b) - u-'(b) = h_sign * h.
class RadialExact {
 public:
  RadialExact(const AnnularGeometry& geometry, double eps, double f, double h, double h_sign = 1.0);

  const AnnularGeometry& geometry() const { return geometry_; }
  double eps() const { return eps_; }
  double f() const { return f_; }
  double h() const { return h_; }
  double h_sign() const { return h_sign_; }

  /// Throws std::out_of_range for r outside [a, c]. At r = b, `side` selects the trace.
  RadialValue eval(double r, Region side) const;
  /// Plus side for r < b, minus side otherwise.
  RadialValue eval(double r) const;

  /// Residuals of u(a) = 0, u(c) = 0, continuity and flux jump at b.
  std::array<double, 4> condition_residuals() const;

  /// Scaled connection coefficients (A', B', C, D).
  const std::array<double, 4>& coefficients() const { return coef_; }

 private:
  AnnularGeometry geometry_;
  double eps_;
  double f_;
  double h_;
  double h_sign_;
  std::array<double, 4> coef_{};
};

RadialExact radial_exact(const AnnularGeometry& geometry, double eps, double f_const, double h_const,
                         double h_sign = 1.0);
RadialValue eval_exact(const RadialExact& solution, double r);

/// Minus part of the eps -> 0 limit problem:
///   -(u'' + u'/r) + u = f on (b, c), u(c) = 0, u'(b) = -h_sign * h.
/// The plus part of the limit is the constant f.
class LimitSolution {
 public:
  LimitSolution(const AnnularGeometry& geometry, double f, double h, double h_sign = 1.0);

  double plus_value() const { return f_; }
  /// Throws std::out_of_range for r outside [b, c].
  RadialValue minus(double r) const;

 private:
  AnnularGeometry geometry_;
  double f_;
  double c_coef_ = 0.0;
  double d_coef_ = 0.0;
};

LimitSolution limit_solution(const AnnularGeometry& geometry, double f_const, double h_const, double h_sign = 1.0);

/// u(r) = (r - a)(c - r) on both regions, with the matching data.
class ManufacturedSolution {
 public:
  ManufacturedSolution(const AnnularGeometry& geometry, double eps);

  RadialValue eval(double r) const;
  double f_plus(double r) const;
  double f_minus(double r) const;
  /// eps^2 u'(b) - u'(b) = (eps^2 - 1)(a + c - 2b).
  double h() const;

 private:
  AnnularGeometry geometry_;
  double eps_;
  double laplacian(double r) const;
};

struct ManufacturedCase {
  TransmissionProblem problem;
  ManufacturedSolution exact;
};

ManufacturedCase manufactured_case(const AnnularGeometry& geometry, double eps, double h_sign = 1.0);

}  // namespace hpfem
