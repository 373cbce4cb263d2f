#pragma once

// Independent reference for the radial transmission problem
//   -D (u'' + u'/r) + u = f,  D = eps^2 on (a, b), 1 on (b, c),
//   u(a) = u(c) = 0,  u continuous at b,  eps^2 u'(b-) - u'(b+) = h,
// by multiple shooting with an adaptive Runge-Kutta-Fehlberg 7(8) integrator.
// Shares no code with the Bessel-based closed form.

#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <Eigen/Dense>
#include <vector>

namespace hpfem::testing {

class ShootingOracle {
 public:
  ShootingOracle(double a, double b, double c, double eps, double f, double h, double tol = 1e-13)
      : a_(a), b_(b), c_(c), eps_(eps), f_(f), tol_(tol) {
    // plus segments no longer than 2 eps so each transfer matrix stays well conditioned
    int n_plus = static_cast<int>(std::ceil((b - a) / (2.0 * eps)));
    n_plus = std::max(2, n_plus + (n_plus % 2));
    const int n_minus = 10;
    for (int i = 0; i <= n_plus; ++i) nodes_.push_back(a + (b - a) * i / n_plus);
    nodes_.back() = b;
    interface_ = n_plus;
    for (int i = 1; i <= n_minus; ++i) nodes_.push_back(b + (c - b) * i / n_minus);
    nodes_.back() = c;
    solve(h);
  }

  const std::vector<double>& nodes() const { return nodes_; }

  /// Value at a node radius (exact match required up to 1e-12).
  double value_at(double r) const {
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      if (std::abs(nodes_[k] - r) < 1e-12) return values_[k];
    }
    // integrate from the closest node to the left
    std::size_t k = 0;
    while (k + 1 < nodes_.size() && nodes_[k + 1] < r) ++k;
    State y = left_state_[k];
    const bool plus = k < static_cast<std::size_t>(interface_);
    integrate(y, nodes_[k], r, plus, f_);
    return y[0];
  }

 private:
  using State = std::array<double, 2>;  // (u, s) with s = e u', e = eps (plus) or 1 (minus)

  void integrate(State& y, double r0, double r1, bool plus, double f) const {
    namespace ode = boost::numeric::odeint;
    const double e = plus ? eps_ : 1.0;
    const double d = plus ? eps_ * eps_ : 1.0;
    auto rhs = [=](const State& x, State& dxdr, double r) {
      dxdr[0] = x[1] / e;
      dxdr[1] = -x[1] / r + e * (x[0] - f) / d;
    };
    auto stepper = ode::make_controlled(tol_, tol_, ode::runge_kutta_fehlberg78<State>());
    ode::integrate_adaptive(stepper, rhs, y, r0, r1, (r1 - r0) / 50.0);
  }

  void solve(double h) {
    const int k_seg = static_cast<int>(nodes_.size()) - 1;
    // unknowns: (u_k, s_k) for k = 0..K, plus the minus-side state at the interface
    const int n = 2 * (k_seg + 1) + 2;
    const int extra = 2 * (k_seg + 1);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    auto start_index = [&](int k) { return k == interface_ ? extra : 2 * k; };
    int row = 0;
    for (int k = 0; k < k_seg; ++k) {
      const bool plus = k < interface_;
      std::array<State, 3> y{State{1.0, 0.0}, State{0.0, 1.0}, State{0.0, 0.0}};
      integrate(y[0], nodes_[k], nodes_[k + 1], plus, 0.0);
      integrate(y[1], nodes_[k], nodes_[k + 1], plus, 0.0);
      integrate(y[2], nodes_[k], nodes_[k + 1], plus, f_);
      const int from = start_index(k);
      const int to = 2 * (k + 1);
      for (int comp = 0; comp < 2; ++comp) {
        m(row, to + comp) = 1.0;
        m(row, from) = -y[0][comp];
        m(row, from + 1) = -y[1][comp];
        rhs[row] = y[2][comp];
        ++row;
      }
    }
    m(row++, 0) = 1.0;           // u(a) = 0
    m(row++, 2 * k_seg) = 1.0;   // u(c) = 0
    const int j = 2 * interface_;
    m(row, j) = 1.0;             // continuity
    m(row++, extra) = -1.0;
    m(row, j + 1) = eps_;        // eps s+ - s- = eps^2 u+' - u-' = h
    m(row, extra + 1) = -1.0;
    rhs[row++] = h;
    const Eigen::VectorXd x = m.partialPivLu().solve(rhs);
    values_.resize(k_seg + 1);
    left_state_.resize(k_seg + 1);
    for (int k = 0; k <= k_seg; ++k) {
      values_[k] = x[2 * k];
      const int s = start_index(k);
      left_state_[k] = {x[s], x[s + 1]};
    }
  }

  double a_, b_, c_, eps_, f_, tol_;
  int interface_ = 0;
  std::vector<double> nodes_;
  std::vector<double> values_;
  std::vector<State> left_state_;
};

/// Limit problem on (b, c): -(u'' + u'/r) + u = f, u(c) = 0, u'(b) = -h, by single shooting.
inline double limit_shooting(double b, double c, double f, double h, double r, double tol = 1e-13) {
  namespace ode = boost::numeric::odeint;
  using State = std::array<double, 2>;
  auto rhs_for = [](double forcing) {
    return [forcing](const State& x, State& dx, double rr) {
      dx[0] = x[1];
      dx[1] = -x[1] / rr + x[0] - forcing;
    };
  };
  auto run = [&](State y, double forcing, double to) {
    auto stepper = ode::make_controlled(tol, tol, ode::runge_kutta_fehlberg78<State>());
    ode::integrate_adaptive(stepper, rhs_for(forcing), y, b, to, (to - b) / 50.0);
    return y;
  };
  // u = particular (u(b) = 0, u'(b) = -h) + alpha * homogeneous (u(b) = 1, u'(b) = 0)
  const double part_c = run({0.0, -h}, f, c)[0];
  const double hom_c = run({1.0, 0.0}, 0.0, c)[0];
  const double alpha = -part_c / hom_c;
  if (r == b) return alpha;
  return run({0.0, -h}, f, r)[0] + alpha * run({1.0, 0.0}, 0.0, r)[0];
}

}  // namespace hpfem::testing
