#include "hpfem/expansion.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hpfem/bessel.hpp"

namespace hpfem {

double smooth_cutoff(double d, double inner, double outer) {
  if (d <= inner) return 1.0;
  if (d >= outer) return 0.0;
  // standard e^{-1/t} gluing
  const auto bump = [](double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; };
  const double t = (d - inner) / (outer - inner);
  const double up = bump(1.0 - t);
  return up / (up + bump(t));
}

CompositeApprox::CompositeApprox(const AnnularGeometry& geometry, double eps, double f, double h, double h_sign,
                                 CompositeOptions options)
    : geometry_(geometry), eps_(eps), f_(f), h_(h), limit_(geometry, f, h, h_sign), options_(options) {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must lie in (0, 1]");
  rho0_ = options.rho0 > 0.0 ? options.rho0 : geometry.default_rho0();
  rho_sigma_ = options.rho_sigma > 0.0 ? options.rho_sigma : geometry.default_rho_sigma();
  rho1_ = 0.5 * rho0_;
  rho2_ = 0.5 * rho_sigma_;

  const double b = geometry.b();
  const double c = geometry.c();
  g_bl_ = -f;

  // V0-: -(V'' + V'/r) + V = 0 on (b, c), V(c) = 0, and V'(b) chosen so the
  // minus trace u0- + V0- meets the flux condition at order eps^0:
  // -(u0-' + V0-')(b) = h_sign h.
  const double neumann = -h_sign * h - limit_.minus(b).derivative;
  const double eb = std::exp(b);
  const double ec = std::exp(c);
  const ScaledBessel sb = bessel_scaled(b);
  const ScaledBessel sc = bessel_scaled(c);
  Eigen::Matrix2d m;
  m << sc.i0 * ec, sc.k0 / ec, sb.i1 * eb, -sb.k1 / eb;
  const Eigen::Vector2d x = m.fullPivLu().solve(Eigen::Vector2d(0.0, neumann));
  v_c_ = x[0];
  v_d_ = x[1];

  g_il_ = interface_minus(b).value - (f - limit_.minus(b).value);
}

RadialValue CompositeApprox::interface_minus(double r) const {
  const ScaledBessel s = bessel_scaled(r);
  const double er = std::exp(r);
  return {v_c_ * s.i0 * er + v_d_ * s.k0 / er, v_c_ * s.i1 * er - v_d_ * s.k1 / er};
}

double CompositeApprox::boundary_layer(double r) const {
  return g_bl_ * std::exp(-(r - geometry_.a()) / eps_);
}

double CompositeApprox::interface_layer(double r) const {
  return g_il_ * std::exp(-(geometry_.b() - r) / eps_);
}

double CompositeApprox::value(double r) const {
  const double a = geometry_.a();
  const double b = geometry_.b();
  if (r >= b) return limit_.minus(r).value + interface_minus(r).value;
  double chi_bl = 1.0;
  double chi_il = 1.0;
  if (options_.use_cutoffs) {
    chi_bl = smooth_cutoff(r - a, rho1_, 0.5 * (rho1_ + rho0_));
    chi_il = smooth_cutoff(b - r, rho2_, 0.5 * (rho2_ + rho_sigma_));
  }
  return f_ + chi_bl * boundary_layer(r) + chi_il * interface_layer(r);
}

CompositeApprox build_composite(const AnnularGeometry& geometry, double eps, double f_const, double h_const,
                                CompositeOptions options) {
  return CompositeApprox(geometry, eps, f_const, h_const, 1.0, options);
}

std::vector<double> composite_sample_radii(const AnnularGeometry& g, double eps, int samples) {
  const int n = std::max(samples, 3);
  const int uniform = n - 2 * (n / 3);
  const int layer = n / 3;
  std::vector<double> radii;
  radii.reserve(n);
  for (int i = 0; i < uniform; ++i) radii.push_back(g.a() + (g.c() - g.a()) * i / (uniform - 1));
  const double depth = std::min(20.0 * eps, 0.5 * (g.b() - g.a()));
  for (int i = 1; i <= layer; ++i) {
    const double d = depth * i / (layer + 1);
    radii.push_back(g.a() + d);
    radii.push_back(g.b() - d);
  }
  std::sort(radii.begin(), radii.end());
  return radii;
}

double composite_error(const CompositeApprox& composite, const RadialExact& exact, int samples) {
  if (!(composite.geometry() == exact.geometry()) || composite.eps() != exact.eps() ||
      composite.f() != exact.f() || composite.h() != exact.h()) {
    throw std::invalid_argument("composite and exact solution describe different problems");
  }
  if (samples < 3) throw std::invalid_argument("composite_error needs at least 3 samples");
  double worst = 0.0;
  for (double r : composite_sample_radii(exact.geometry(), exact.eps(), samples)) {
    worst = std::max(worst, std::abs(composite.value(r) - exact.eval(r).value));
  }
  return worst;
}

}  // namespace hpfem
