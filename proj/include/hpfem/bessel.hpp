#pragma once

namespace hpfem {

/// Exponentially scaled modified Bessel functions of orders 0 and 1:
///   i0 = e^{-x} I0(x), i1 = e^{-x} I1(x), k0 = e^{x} K0(x), k1 = e^{x} K1(x).
struct ScaledBessel {
  double x = 0.0;
  double i0 = 0.0;
  double i1 = 0.0;
  double k0 = 0.0;
  double k1 = 0.0;
};

/// Relative accuracy ~1e-15 for x in (0, 1e7]. Throws std::domain_error for x <= 0.
///
/// I: power series below x = 30, large-argument expansion above (its truncation
/// error there is below e^{-2x}). K: power series up to x = 2 and Steed's
/// continued fraction beyond, which has no cancellation at moderate x.
ScaledBessel bessel_scaled(double x);

}  // namespace hpfem
