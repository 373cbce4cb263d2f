#include "hpfem/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hpfem {

namespace {

constexpr int max_newton_iterations = 100;
constexpr double root_tolerance = 1e-15;

// Damped Newton for a root of g inside the bracket [lo, hi]; falls back to
// bisection whenever the step leaves the bracket or fails to shrink |g|.
template <class F>
double bracketed_root(F&& g, double guess, double lo, double hi) {
  double g_lo = g(lo).first;
  double x = guess;
  for (int it = 0; it < max_newton_iterations; ++it) {
    const auto [gx, dgx] = g(x);
    if (std::abs(gx) <= root_tolerance) return x;
    if ((gx < 0.0) == (g_lo < 0.0)) {
      lo = x;
      g_lo = gx;
    } else {
      hi = x;
    }
    double step = dgx != 0.0 ? gx / dgx : 0.0;
    double next = x - step;
    double damping = 1.0;
    while (damping > 1e-3 && (next <= lo || next >= hi || std::abs(g(next).first) > std::abs(gx))) {
      damping *= 0.5;
      next = x - damping * step;
    }
    if (next <= lo || next >= hi || damping <= 1e-3) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) {
      return next;
    }
    x = next;
  }
  return x;
}

}  // namespace

LegendreValue legendre(int n, double x) {
  if (n == 0) return {1.0, 0.0};
  double p_prev = 1.0;
  double p = x;
  for (int k = 2; k <= n; ++k) {
    const double p_next = ((2.0 * k - 1.0) * x * p - (k - 1.0) * p_prev) / k;
    p_prev = p;
    p = p_next;
  }
  double dp;
  if (std::abs(x) == 1.0) {
    // P_n'(+-1) = (+-1)^(n-1) n(n+1)/2
    dp = 0.5 * n * (n + 1.0) * ((x < 0.0 && n % 2 == 0) ? -1.0 : 1.0);
  } else {
    dp = n * (x * p - p_prev) / (x * x - 1.0);
  }
  return {p, dp};
}

QuadRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre rule needs n >= 1 (got " + std::to_string(n) + ")");
  QuadRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // i-th largest root of P_n
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < max_newton_iterations; ++it) {
      const auto [p, dp] = legendre(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-16) break;
    }
    const double dp = legendre(n, x).derivative;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[n - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[n - 1 - i] = w;
    rule.weights[i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

QuadRule gauss_lobatto(int p) {
  if (p < 1) throw std::invalid_argument("Gauss-Lobatto rule needs p >= 1 (got " + std::to_string(p) + ")");
  const int n = p + 1;
  QuadRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  rule.nodes.front() = -1.0;
  rule.nodes.back() = 1.0;

  // zeros of P_p' solve g(x) = P_p'(x); g' = (2x P_p' - p(p+1) P_p) / (1 - x^2)
  auto g = [p](double x) {
    const auto [v, d] = legendre(p, x);
    const double dd = (2.0 * x * d - p * (p + 1.0) * v) / (1.0 - x * x);
    return std::pair{d, dd};
  };
  // Zeros of P_p' interlace the zeros of P_p, so consecutive Gauss-Legendre
  // nodes bracket each one; the Chebyshev-Gauss-Lobatto point is the initial guess.
  const QuadRule gauss = gauss_legendre(p);
  for (int i = 1; i < p; ++i) {
    const double lo = gauss.nodes[i - 1];
    const double hi = gauss.nodes[i];
    double guess = -std::cos(std::numbers::pi * i / p);
    if (!(guess > lo && guess < hi)) guess = 0.5 * (lo + hi);
    rule.nodes[i] = bracketed_root(g, guess, lo, hi);
  }
  // enforce exact symmetry
  for (int i = 1; i <= (p - 1) / 2; ++i) {
    const double x = 0.5 * (rule.nodes[n - 1 - i] - rule.nodes[i]);
    rule.nodes[n - 1 - i] = x;
    rule.nodes[i] = -x;
  }
  if (p % 2 == 0) rule.nodes[p / 2] = 0.0;

  for (int i = 0; i < n; ++i) {
    const double pp = legendre(p, rule.nodes[i]).value;
    rule.weights[i] = 2.0 / (p * (p + 1.0) * pp * pp);
  }
  return rule;
}

NodalBasis1D::NodalBasis1D(int degree) : degree_(degree), nodes_(gauss_lobatto(degree).nodes) {
  const std::size_t n = nodes_.size();
  bary_.assign(n, 1.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k != j) bary_[j] /= (nodes_[j] - nodes_[k]);
    }
  }
  diff_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double diag = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double dij = (bary_[j] / bary_[i]) / (nodes_[i] - nodes_[j]);
      diff_[i * n + j] = dij;
      diag -= dij;
    }
    diff_[i * n + i] = diag;
  }
}

int NodalBasis1D::node_index(double x) const {
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    if (x == nodes_[k]) return static_cast<int>(k);
  }
  return -1;
}

void NodalBasis1D::values(double x, std::span<double> out) const {
  const std::size_t n = nodes_.size();
  const int hit = node_index(x);
  if (hit >= 0) {
    std::fill(out.begin(), out.begin() + n, 0.0);
    out[hit] = 1.0;
    return;
  }
  double ell = 1.0;
  for (double xk : nodes_) ell *= (x - xk);
  for (std::size_t j = 0; j < n; ++j) out[j] = ell * bary_[j] / (x - nodes_[j]);
}

void NodalBasis1D::derivatives(double x, std::span<double> out) const {
  const std::size_t n = nodes_.size();
  const int hit = node_index(x);
  if (hit >= 0) {
    for (std::size_t j = 0; j < n; ++j) out[j] = diff_[hit * n + j];
    return;
  }
  // l_j' = w_j * sum_{m != j} prod_{k != j, m} (x - x_k)
  // computed as l_j(x) * sum_{k != j} 1 / (x - x_k)
  std::vector<double> val(n);
  values(x, val);
  double total = 0.0;
  for (double xk : nodes_) total += 1.0 / (x - xk);
  for (std::size_t j = 0; j < n; ++j) out[j] = val[j] * (total - 1.0 / (x - nodes_[j]));
}

std::vector<double> NodalBasis1D::values(double x) const {
  std::vector<double> out(size());
  values(x, out);
  return out;
}

std::vector<double> NodalBasis1D::derivatives(double x) const {
  std::vector<double> out(size());
  derivatives(x, out);
  return out;
}

BasisTable tabulate(const NodalBasis1D& basis, std::span<const double> points) {
  BasisTable table;
  table.n_basis = basis.size();
  table.n_points = points.size();
  table.value.resize(table.n_basis * table.n_points);
  table.deriv.resize(table.n_basis * table.n_points);
  for (std::size_t q = 0; q < points.size(); ++q) {
    basis.values(points[q], std::span(table.value).subspan(q * table.n_basis, table.n_basis));
    basis.derivatives(points[q], std::span(table.deriv).subspan(q * table.n_basis, table.n_basis));
  }
  return table;
}

double interpolate_gl(std::span<const double> grid, int p, double x, double y) {
  const std::size_t n = static_cast<std::size_t>(p) + 1;
  if (p < 1 || grid.size() != n * n) {
    throw std::invalid_argument("interpolation grid must hold (p+1)^2 = " + std::to_string(n * n) +
                                " values (got " + std::to_string(grid.size()) + ")");
  }
  const NodalBasis1D basis(p);
  const auto lx = basis.values(x);
  const auto ly = basis.values(y);
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double row = 0.0;
    for (std::size_t i = 0; i < n; ++i) row += grid[i + n * j] * lx[i];
    sum += row * ly[j];
  }
  return sum;
}

}  // namespace hpfem
