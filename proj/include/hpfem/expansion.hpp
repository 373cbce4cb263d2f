#pragma once

#include "hpfem/exact_oracle.hpp"

namespace hpfem {

/// C-infinity cut-off: 1 for d <= inner, 0 for d >= outer, smooth in between.
double smooth_cutoff(double d, double inner, double outer);

struct CompositeOptions {
  double rho0 = 0.0;       // tube depth along r = a; <= 0 picks the geometry default
  double rho_sigma = 0.0;  // tube depth along r = b; <= 0 picks the geometry default
  bool use_cutoffs = true;
};

/// Leading-order (M = 0) asymptotic approximation for constant data:
///   plus:  f + chi_BL g_bl e^{-(r-a)/eps} + chi_IL g_il e^{-(b-r)/eps}
///   minus: u0-(r) + V0-(r)
/// with u0- the limit solution, g_bl = -f the boundary-layer amplitude,
/// V0- the interface corrector on the minus side and
/// g_il = V0-(b) - (f - u0-(b)) the interface-layer amplitude.
class CompositeApprox {
 public:
  CompositeApprox(const AnnularGeometry& geometry, double eps, double f, double h, double h_sign = 1.0,
                  CompositeOptions options = {});

  const AnnularGeometry& geometry() const { return geometry_; }
  double eps() const { return eps_; }
  double f() const { return f_; }
  double h() const { return h_; }

  double outer_plus() const { return f_; }
  const LimitSolution& outer_minus() const { return limit_; }
  double boundary_layer_amplitude() const { return g_bl_; }
  double interface_layer_amplitude() const { return g_il_; }
  /// Interface corrector V0- on [b, c].
  RadialValue interface_minus(double r) const;
  /// Cut-off bands: chi_BL = 1 up to rho1, 0 beyond (rho1 + rho0)/2 (same for IL with rho2, rho_sigma).
  double rho1() const { return rho1_; }
  double rho2() const { return rho2_; }

  /// g_bl e^{-(r-a)/eps} and g_il e^{-(b-r)/eps}, without cut-offs.
  double boundary_layer(double r) const;
  double interface_layer(double r) const;

  double value(double r) const;

 private:
  AnnularGeometry geometry_;
  double eps_;
  double f_;
  double h_;
  LimitSolution limit_;
  CompositeOptions options_;
  double rho0_ = 0.0;
  double rho_sigma_ = 0.0;
  double rho1_ = 0.0;
  double rho2_ = 0.0;
  double g_bl_ = 0.0;
  double g_il_ = 0.0;
  double v_c_ = 0.0;  // V0- = v_c I0(r) + v_d K0(r)
  double v_d_ = 0.0;
};

CompositeApprox build_composite(const AnnularGeometry& geometry, double eps, double f_const, double h_const,
                                CompositeOptions options = {});

/// Radii at which composite_error samples: uniform over [a, c] plus clusters
/// resolving the eps-wide layers next to r = a and r = b.
std::vector<double> composite_sample_radii(const AnnularGeometry& geometry, double eps, int samples);

/// max |composite - exact| over composite_sample_radii. Throws std::invalid_argument
/// if the two describe different problems.
double composite_error(const CompositeApprox& composite, const RadialExact& exact, int samples);

}  // namespace hpfem
