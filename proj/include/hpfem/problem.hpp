#pragma once

#include <functional>

#include "hpfem/geometry.hpp"

namespace hpfem {

/// Data of the transmission problem
///   -eps^2 Lap u+ + u+ = f+ in Omega_plus,   -Lap u- + u- = f- in Omega_minus,
///   u = 0 on r = a and r = c,  u+ = u- and eps^2 du+/dr - du-/dr = h on r = b.
///
/// The load functional is F(v) = int f v + h_sign * int_Sigma h v. With
/// h_sign = +1 the discrete problem is consistent with the flux condition above.
struct TransmissionProblem {
  AnnularGeometry geometry;
  double eps = 1.0;
  std::function<double(Vec2)> f_plus;
  std::function<double(Vec2)> f_minus;
  std::function<double(double theta)> h;
  double h_sign = 1.0;
};

/// Constant data f+ = f_plus, f- = f_minus, h = h_value.
TransmissionProblem constant_problem(const AnnularGeometry& geometry, double eps, double f_plus, double f_minus,
                                     double h_value, double h_sign = 1.0);

}  // namespace hpfem
