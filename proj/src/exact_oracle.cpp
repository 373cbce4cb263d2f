#include "hpfem/exact_oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hpfem/assembly.hpp"
#include "hpfem/bessel.hpp"

namespace hpfem {

namespace {

constexpr double condition_tolerance = 1e-10;

// Values of I0, K0, I1, K1 at an O(1) argument (no scaling needed for r <= c).
struct Unscaled {
  double i0, k0, i1, k1;
};
Unscaled unscaled(double x) {
  const ScaledBessel s = bessel_scaled(x);
  const double ex = std::exp(x);
  return {s.i0 * ex, s.k0 / ex, s.i1 * ex, s.k1 / ex};
}

}  // namespace

RadialExact::RadialExact(const AnnularGeometry& geometry, double eps, double f, double h, double h_sign)
    : geometry_(geometry), eps_(eps), f_(f), h_(h), h_sign_(h_sign) {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must lie in (0, 1]");
  const double a = geometry.a();
  const double b = geometry.b();
  const double c = geometry.c();
  const ScaledBessel pa = bessel_scaled(a / eps);
  const ScaledBessel pb = bessel_scaled(b / eps);
  const double gap = std::exp((a - b) / eps);
  const Unscaled mb = unscaled(b);
  const Unscaled mc = unscaled(c);

  // unknowns (A', B', C, D)
  Eigen::Matrix4d m;
  Eigen::Vector4d rhs;
  m << gap * pa.i0, pa.k0, 0.0, 0.0,                        // u+(a) = 0
      0.0, 0.0, mc.i0, mc.k0,                               // u-(c) = 0
      pb.i0, gap * pb.k0, -mb.i0, -mb.k0,                   // u+(b) = u-(b)
      eps * pb.i1, -eps * gap * pb.k1, -mb.i1, mb.k1;       // eps^2 u+'(b) - u-'(b) = h
  rhs << -f, -f, 0.0, h_sign * h;
  const Eigen::FullPivLU<Eigen::Matrix4d> lu(m);
  if (!lu.isInvertible()) throw NumericalError("radial connection system is singular");
  const Eigen::Vector4d x = lu.solve(rhs);
  coef_ = {x[0], x[1], x[2], x[3]};

  const auto res = condition_residuals();
  for (std::size_t k = 0; k < res.size(); ++k) {
    if (!(std::abs(res[k]) <= condition_tolerance * std::max(1.0, std::abs(f) + std::abs(h)))) {
      throw NumericalError("radial exact solution violates transmission condition " + std::to_string(k) +
                           " (residual " + std::to_string(res[k]) + ")");
    }
  }
}

RadialValue RadialExact::eval(double r, Region side) const {
  const double a = geometry_.a();
  const double b = geometry_.b();
  const double c = geometry_.c();
  if (!(r >= a && r <= c)) throw std::out_of_range("radius " + std::to_string(r) + " outside [a, c]");
  if (side == Region::plus && r > b) side = Region::minus;
  if (side == Region::minus && r < b) side = Region::plus;
  if (side == Region::plus) {
    const ScaledBessel s = bessel_scaled(r / eps_);
    const double grow = std::exp((r - b) / eps_);
    const double decay = std::exp((a - r) / eps_);
    const double value = f_ + coef_[0] * grow * s.i0 + coef_[1] * decay * s.k0;
    const double derivative = (coef_[0] * grow * s.i1 - coef_[1] * decay * s.k1) / eps_;
    return {value, derivative};
  }
  const Unscaled u = unscaled(r);
  return {f_ + coef_[2] * u.i0 + coef_[3] * u.k0, coef_[2] * u.i1 - coef_[3] * u.k1};
}

RadialValue RadialExact::eval(double r) const { return eval(r, r < geometry_.b() ? Region::plus : Region::minus); }

std::array<double, 4> RadialExact::condition_residuals() const {
  const double b = geometry_.b();
  const RadialValue plus_b = eval(b, Region::plus);
  const RadialValue minus_b = eval(b, Region::minus);
  return {eval(geometry_.a()).value, eval(geometry_.c()).value, plus_b.value - minus_b.value,
          eps_ * eps_ * plus_b.derivative - minus_b.derivative - h_sign_ * h_};
}

RadialExact radial_exact(const AnnularGeometry& geometry, double eps, double f_const, double h_const,
                         double h_sign) {
  return RadialExact(geometry, eps, f_const, h_const, h_sign);
}

RadialValue eval_exact(const RadialExact& solution, double r) { return solution.eval(r); }

LimitSolution::LimitSolution(const AnnularGeometry& geometry, double f, double h, double h_sign)
    : geometry_(geometry), f_(f) {
  const Unscaled mb = unscaled(geometry.b());
  const Unscaled mc = unscaled(geometry.c());
  // C I0(c) + D K0(c) = -f ;  C I1(b) - D K1(b) = -h_sign h
  Eigen::Matrix2d m;
  m << mc.i0, mc.k0, mb.i1, -mb.k1;
  const Eigen::Vector2d x = m.fullPivLu().solve(Eigen::Vector2d(-f, -h_sign * h));
  c_coef_ = x[0];
  d_coef_ = x[1];
}

RadialValue LimitSolution::minus(double r) const {
  if (!(r >= geometry_.b() && r <= geometry_.c())) {
    throw std::out_of_range("radius " + std::to_string(r) + " outside [b, c]");
  }
  const Unscaled u = unscaled(r);
  return {f_ + c_coef_ * u.i0 + d_coef_ * u.k0, c_coef_ * u.i1 - d_coef_ * u.k1};
}

LimitSolution limit_solution(const AnnularGeometry& geometry, double f_const, double h_const, double h_sign) {
  return LimitSolution(geometry, f_const, h_const, h_sign);
}

ManufacturedSolution::ManufacturedSolution(const AnnularGeometry& geometry, double eps)
    : geometry_(geometry), eps_(eps) {}

RadialValue ManufacturedSolution::eval(double r) const {
  const double a = geometry_.a();
  const double c = geometry_.c();
  return {(r - a) * (c - r), a + c - 2.0 * r};
}

// u'' + u'/r
double ManufacturedSolution::laplacian(double r) const {
  return -2.0 + (geometry_.a() + geometry_.c() - 2.0 * r) / r;
}

double ManufacturedSolution::f_plus(double r) const { return -eps_ * eps_ * laplacian(r) + eval(r).value; }
double ManufacturedSolution::f_minus(double r) const { return -laplacian(r) + eval(r).value; }

double ManufacturedSolution::h() const {
  return (eps_ * eps_ - 1.0) * (geometry_.a() + geometry_.c() - 2.0 * geometry_.b());
}

ManufacturedCase manufactured_case(const AnnularGeometry& geometry, double eps, double h_sign) {
  ManufacturedSolution exact(geometry, eps);
  TransmissionProblem problem{geometry, eps, nullptr, nullptr, nullptr, h_sign};
  problem.f_plus = [exact](Vec2 p) { return exact.f_plus(std::hypot(p.x, p.y)); };
  problem.f_minus = [exact](Vec2 p) { return exact.f_minus(std::hypot(p.x, p.y)); };
  const double h = exact.h();
  problem.h = [h](double) { return h; };
  return {std::move(problem), exact};
}

}  // namespace hpfem
